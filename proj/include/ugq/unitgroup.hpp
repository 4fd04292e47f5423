#ifndef UGQ_UNITGROUP_HPP
#define UGQ_UNITGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugq/factor.hpp"
#include "ugq/orbit.hpp"
#include "ugq/ring.hpp"

namespace ugq {

struct SearchBudget {
    int max_deg_b = 64;
    std::optional<double> time_limit_seconds;  // breaks determinism when set
};

struct SearchOptions {
    bool prune = true;
    int workers = 0;  // 0 = UGQ_THREADS / hardware
};

struct SearchStats {
    std::uint64_t stages_examined = 0;
    std::uint64_t stages_pruned = 0;
    std::uint64_t candidates_tested = 0;
    int last_target = -1;      // largest deg b target reached
    int found_m = -1;          // stage of the solution, if any
    Poly found_e;
    bool time_limited = false;
};

enum class Verdict { Trivial, InfiniteCyclic, OrderThree, AdditiveFx, Unknown };
const char* to_string(Verdict v);

/// Outcome of the unit-group decision. For nontrivial verdicts `unit` holds
/// a fundamental unit of the *input* ring (the search works on the minimal
/// representative and transports back through `shift`).
struct UnitGroupResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<RingElem> unit;
    int max_deg_b_searched = -1;  // set for Unknown
    std::string provenance;       // rule or search stage that decided
    ParamPair reduced;
    OrbitClass reduced_type = OrbitClass::NotMinimal;
    Poly shift;
    SearchStats stats;
};

/// Decides (non)triviality of the unit group of F2[x,y]/(y^2 + gy + h).
/// Closed forms cover every case except Type 3 with h nonzero and h not
/// dividing g, which runs the degree-staged search up to the budget.
UnitGroupResult unit_group(const ParamPair& pair, const SearchBudget& budget = {},
                           const SearchOptions& opts = {});

/// Staged search for the fundamental unit of a Type 3 minimal representative
/// with h != 0, h not dividing g. Targets deg b = deg e + 2m ascending; the
/// first solution found lifts to the fundamental unit (minimal deg b).
/// Returns nothing when the budget is exhausted.
std::optional<RingElem> find_fundamental_unit(const ParamPair& pair, const SearchBudget& budget,
                                              const SearchOptions& opts = {},
                                              SearchStats* stats = nullptr);

/// All solutions of Q(c, d) = g/e with c, d monic of exact degrees
/// (m + deg h - deg g, m): enumerates c, solves the affine-linear system in
/// d over GF(2), verifies each solution exactly. `d_floors` forces
/// p^k | d (sound stage constraints); pass {} for none.
std::vector<DescentTriple> solve_stage(const ParamPair& pair, const Poly& e, int m);
std::vector<DescentTriple> solve_stage(const ParamPair& pair, const Poly& e, int m,
                                       const std::vector<std::pair<Poly, int>>& d_floors,
                                       int workers, std::uint64_t* candidates = nullptr);

/// Minimal valuations nu_p(d) >= k forced on stage (e, m) solutions by the
/// fundamental-unit multiplicity constraints.
std::vector<std::pair<Poly, int>> d_valuation_floors(const ParamPair& pair, const Poly& e,
                                                     const Factorization& fac_g);

/// True when stage (e, m) cannot contain the fundamental unit: a forced
/// valuation exceeds m, or g is irreducible and e != 1.
bool prune_stage(const ParamPair& pair, const Poly& e, int m, const Factorization& fac_g);

/// Exhaustive reference: every nontrivial unit with deg b <= max_deg_b and
/// deg a <= max_deg_b + max(deg g, deg h, 0), sorted by (deg b, deg a,
/// encoding). Shares nothing with the staged search beyond Poly arithmetic.
std::vector<RingElem> brute_force_oracle(const ParamPair& pair, int max_deg_b);

}  // namespace ugq

#endif
