#ifndef UGQ_SWEEP_HPP
#define UGQ_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ugq/unitgroup.hpp"

namespace ugq {

struct PairRecord {
    ParamPair pair;
    Verdict verdict = Verdict::Unknown;
    std::string provenance;
    bool fast_path = false;  // resolved by h | g or g^2 | h closed form
    Degree deg_a;
    Degree deg_b;
    std::optional<RingElem> unit;
    double wall_ms = 0.0;  // timing only; not part of the deterministic content
};

struct SweepReport {
    int deg_g = 0;
    int budget_max_deg_b = 0;
    std::uint64_t pairs_total = 0;
    std::uint64_t pairs_resolved = 0;
    std::vector<ParamPair> pairs_unknown;
    int max_deg_b = -1;  // over InfiniteCyclic records; -1 when none
    std::vector<ParamPair> achievers;
    std::vector<PairRecord> records;
};

/// All Type 3 minimal representatives with deg g exactly deg_g and h != 0:
/// 2^deg_g choices of g (top coefficient forced) times 2^deg_g - 1 of h,
/// ordered by (g, h) encodings.
std::vector<ParamPair> enumerate_type3(int deg_g);

/// Runs unit_group over every enumerated pair and aggregates. Pairs are
/// distributed across workers; the report order is the enumeration order
/// regardless of scheduling.
SweepReport sweep_conjecture(int deg_g, const SearchBudget& budget,
                             const SearchOptions& opts = {});

struct FamilyEntry {
    int m = 0;
    std::optional<RingElem> unit;  // empty when the budget was exhausted
    int deg_b = -1;
    int nu_x_b = -1;
};

/// Fundamental units of the family (x^m, x+1) for m = 2..m_max.
std::vector<FamilyEntry> family_xm(int m_max, const SearchBudget& budget,
                                   const SearchOptions& opts = {});

}  // namespace ugq

#endif
