#ifndef UGQ_PARALLEL_HPP
#define UGQ_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace ugq {

/// Worker count: `requested` if positive, else the UGQ_THREADS environment
/// variable, else hardware concurrency. Always at least 1.
int thread_budget(int requested = 0);

/// Runs fn(i) for i in [0, n) on `workers` threads with dynamic scheduling.
/// Items must be independent; callers are responsible for merging results
/// in a schedule-independent (index-based) order.
void parallel_for_dynamic(std::uint64_t n, int workers,
                          const std::function<void(std::uint64_t)>& fn);

}  // namespace ugq

#endif
