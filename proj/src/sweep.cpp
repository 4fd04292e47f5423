#include "ugq/sweep.hpp"

#include <chrono>

#include "ugq/parallel.hpp"

namespace ugq {

std::vector<ParamPair> enumerate_type3(int deg_g) {
    if (deg_g < 1) throw std::invalid_argument("enumerate_type3: deg_g must be >= 1");
    if (deg_g > 20) throw std::invalid_argument("enumerate_type3: deg_g out of desk range");
    std::vector<ParamPair> out;
    const std::uint64_t lo = std::uint64_t(1) << deg_g;
    out.reserve(static_cast<std::size_t>(lo * (lo - 1)));
    for (std::uint64_t gv = lo; gv < 2 * lo; ++gv)
        for (std::uint64_t hv = 1; hv < lo; ++hv)
            out.push_back({Poly::from_value(gv), Poly::from_value(hv)});
    return out;
}

SweepReport sweep_conjecture(int deg_g, const SearchBudget& budget, const SearchOptions& opts) {
    SweepReport report;
    report.deg_g = deg_g;
    report.budget_max_deg_b = budget.max_deg_b;

    const std::vector<ParamPair> pairs = enumerate_type3(deg_g);
    report.pairs_total = pairs.size();
    report.records.resize(pairs.size());

    // pair-level parallelism; each search runs single-threaded
    SearchOptions inner = opts;
    inner.workers = 1;
    parallel_for_dynamic(pairs.size(), opts.workers, [&](std::uint64_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        const UnitGroupResult r = unit_group(pairs[i], budget, inner);
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        PairRecord& rec = report.records[i];
        rec.pair = pairs[i];
        rec.verdict = r.verdict;
        rec.provenance = r.provenance;
        rec.fast_path = r.provenance.rfind("h divides g", 0) == 0 ||
                        r.provenance.rfind("g^2 divides h", 0) == 0;
        rec.unit = r.unit;
        if (r.unit) {
            rec.deg_a = r.unit->a.degree();
            rec.deg_b = r.unit->b.degree();
        }
        rec.wall_ms = dt.count();
    });

    for (const PairRecord& rec : report.records) {
        if (rec.verdict == Verdict::Unknown) {
            report.pairs_unknown.push_back(rec.pair);
            continue;
        }
        ++report.pairs_resolved;
        if (rec.verdict == Verdict::InfiniteCyclic && rec.deg_b.finite() &&
            rec.deg_b.value() > report.max_deg_b)
            report.max_deg_b = rec.deg_b.value();
    }
    for (const PairRecord& rec : report.records)
        if (rec.verdict == Verdict::InfiniteCyclic && rec.deg_b.finite() &&
            rec.deg_b.value() == report.max_deg_b)
            report.achievers.push_back(rec.pair);
    return report;
}

std::vector<FamilyEntry> family_xm(int m_max, const SearchBudget& budget,
                                   const SearchOptions& opts) {
    if (m_max < 2) throw std::invalid_argument("family_xm: m_max must be >= 2");
    std::vector<FamilyEntry> out;
    for (int m = 2; m <= m_max; ++m) {
        const ParamPair pair{Poly::monomial(static_cast<std::size_t>(m)),
                             Poly::from_bits({1, 0})};
        FamilyEntry entry;
        entry.m = m;
        const UnitGroupResult r = unit_group(pair, budget, opts);
        if (r.verdict == Verdict::InfiniteCyclic) {
            entry.unit = r.unit;
            entry.deg_b = static_cast<int>(r.unit->b.degree_index());
            entry.nu_x_b = valuation(r.unit->b, Poly::x());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace ugq
