#include "ugq/unitgroup.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "ugq/parallel.hpp"

namespace ugq {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Trivial: return "Trivial";
        case Verdict::InfiniteCyclic: return "InfiniteCyclic";
        case Verdict::OrderThree: return "OrderThree";
        case Verdict::AdditiveFx: return "AdditiveFx";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

bool is_squarefree_nonzero(const Poly& e) {
    return !e.is_zero() && gcd(e, derivative(e)).is_one();
}

// ---------------------------------------------------------------------------
// Stage solver. For fixed monic c of degree Dc = m + deg h - deg g, writing
// d = x^m + dl with deg dl < m, the stage equation Q(c, d) = g/e becomes
//
//   dl^2 h + dl (cg) = rhs + c^2 + cg x^m + x^(2m) h
//
// which is affine-linear in the coefficients of dl (squaring and
// multiplication by fixed polynomials are GF(2)-linear). Rows are packed as
// uint64: bits [0, m) the unknowns, bit m the affine constant.
// ---------------------------------------------------------------------------

struct StageContext {
    ParamPair pair;
    Poly e;
    Poly rhs;  // g / e
    int m = 0;
    int dc = 0;
    std::size_t n_rows = 0;
    std::vector<std::uint64_t> base_rows;  // c-independent part, constraints included
};

struct StageSolution {
    std::uint64_t candidate;  // enumeration index of c
    Poly d;
};

void toggle_cg_bit(std::vector<std::uint64_t>& rows, std::size_t p, int m) {
    // one flipped bit of cg touches column i in row p+i, and the constant in row p+m
    for (int i = 0; i < m; ++i) rows[p + static_cast<std::size_t>(i)] ^= std::uint64_t(1) << i;
    rows[p + static_cast<std::size_t>(m)] ^= std::uint64_t(1) << m;
}

void toggle_c_bit(std::vector<std::uint64_t>& rows, const Poly& g, std::size_t j, int m) {
    rows[2 * j] ^= std::uint64_t(1) << m;  // c^2 contribution to the constant
    for (std::size_t wi = 0; wi < g.words().size(); ++wi) {
        std::uint64_t w = g.words()[wi];
        while (w) {
            const int s = std::countr_zero(w);
            w &= w - 1;
            toggle_cg_bit(rows, j + 64 * wi + static_cast<std::size_t>(s), m);
        }
    }
}

StageContext make_stage_context(const ParamPair& pair, const Poly& e, int m,
                                const std::vector<std::pair<Poly, int>>& d_floors) {
    if (m < 1) throw std::invalid_argument("solve_stage: m must be >= 1");
    if (m > 62) throw std::invalid_argument("solve_stage: m too large for packed rows");
    if (!is_squarefree_nonzero(e)) throw std::invalid_argument("solve_stage: e not squarefree");
    if (e == pair.g) throw std::invalid_argument("solve_stage: e = g is excluded");
    const auto [rhs, rem] = divrem(pair.g, e);
    if (!rem.is_zero()) throw std::invalid_argument("solve_stage: e does not divide g");

    StageContext ctx;
    ctx.pair = pair;
    ctx.e = e;
    ctx.rhs = rhs;
    ctx.m = m;
    const int gbar = pair.g.degree().value();
    const int hbar = pair.h.degree().value();
    ctx.dc = m + hbar - gbar;

    const std::size_t n_main = static_cast<std::size_t>(2 * m + hbar) + 1;
    std::size_t n_extra = 0;
    for (const auto& [p, k] : d_floors)
        n_extra += static_cast<std::size_t>(k) * p.degree_index();
    ctx.n_rows = n_main + n_extra;
    ctx.base_rows.assign(ctx.n_rows, 0);

    // columns x^(2i) h
    for (int i = 0; i < m; ++i)
        for (std::size_t wi = 0; wi < pair.h.words().size(); ++wi) {
            std::uint64_t w = pair.h.words()[wi];
            while (w) {
                const int s = std::countr_zero(w);
                w &= w - 1;
                ctx.base_rows[2 * static_cast<std::size_t>(i) + 64 * wi + static_cast<std::size_t>(s)] ^=
                    std::uint64_t(1) << i;
            }
        }
    // constant part rhs + x^(2m) h
    const Poly r0 = rhs + pair.h.shifted_left(2 * static_cast<std::size_t>(m));
    for (std::size_t i = 0; i <= r0.degree_index() && !r0.is_zero(); ++i)
        if (r0.bit(i)) ctx.base_rows[i] ^= std::uint64_t(1) << m;

    // forced divisibility p^k | d, encoded as (d mod p^k) = 0
    std::size_t row0 = n_main;
    for (const auto& [p, k] : d_floors) {
        const Poly pk = pow(p, static_cast<unsigned>(k));
        const std::size_t nr = pk.degree_index();
        for (int i = 0; i <= m; ++i) {
            const Poly res = divrem(Poly::monomial(static_cast<std::size_t>(i)), pk).rem;
            const std::uint64_t bit = std::uint64_t(1) << i;  // i == m is the constant column
            for (std::size_t j = 0; j < nr; ++j)
                if (res.bit(j)) ctx.base_rows[row0 + j] ^= bit;
        }
        row0 += nr;
    }
    return ctx;
}

// Solves the packed affine system in-place; appends every solution for this
// candidate (sorted by d) to out.
void solve_candidate(const StageContext& ctx, std::vector<std::uint64_t>& scratch,
                     std::uint64_t candidate, std::vector<StageSolution>& out) {
    const int m = ctx.m;
    const std::uint64_t rhs_bit = std::uint64_t(1) << m;
    const std::uint64_t cols_mask = rhs_bit - 1;

    int pivot_col[64];
    int rank = 0;
    const std::size_t nr = scratch.size();
    for (int col = 0; col < m; ++col) {
        const std::uint64_t bit = std::uint64_t(1) << col;
        std::size_t found = nr;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nr; ++r)
            if (scratch[r] & bit) { found = r; break; }
        if (found == nr) continue;
        std::swap(scratch[static_cast<std::size_t>(rank)], scratch[found]);
        const std::uint64_t prow = scratch[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < nr; ++r)
            if (r != static_cast<std::size_t>(rank) && (scratch[r] & bit)) scratch[r] ^= prow;
        pivot_col[rank++] = col;
    }
    for (std::size_t r = static_cast<std::size_t>(rank); r < nr; ++r)
        if (scratch[r]) return;  // leftover constant: inconsistent

    std::uint64_t particular = 0;
    for (int i = 0; i < rank; ++i)
        if (scratch[static_cast<std::size_t>(i)] & rhs_bit)
            particular |= std::uint64_t(1) << pivot_col[i];

    std::uint64_t free_mask = cols_mask;
    for (int i = 0; i < rank; ++i) free_mask &= ~(std::uint64_t(1) << pivot_col[i]);

    std::vector<std::uint64_t> basis;
    std::uint64_t fm = free_mask;
    while (fm) {
        const int f = std::countr_zero(fm);
        fm &= fm - 1;
        std::uint64_t v = std::uint64_t(1) << f;
        for (int i = 0; i < rank; ++i)
            if (scratch[static_cast<std::size_t>(i)] & (std::uint64_t(1) << f))
                v |= std::uint64_t(1) << pivot_col[i];
        basis.push_back(v);
    }

    std::vector<std::uint64_t> dls;
    for (std::uint64_t sel = 0;; ++sel) {
        std::uint64_t dl = particular;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (sel & (std::uint64_t(1) << i)) dl ^= basis[i];
        dls.push_back(dl);
        if (sel + 1 == (std::uint64_t(1) << basis.size())) break;
    }
    std::sort(dls.begin(), dls.end());

    const Poly c = Poly::monomial(static_cast<std::size_t>(ctx.dc)) +
                   Poly::from_value(candidate ^ (candidate >> 1));
    for (const std::uint64_t dl : dls) {
        const Poly d = Poly::monomial(static_cast<std::size_t>(m)) + Poly::from_value(dl);
        if (eval_quadratic_form(ctx.pair, c, d) != ctx.rhs)
            throw std::logic_error("solve_stage: solution failed direct re-evaluation");
        out.push_back({candidate, d});
    }
}

// Enumerates candidates [first, last) in Gray order, maintaining the
// c-dependent row deltas incrementally.
void run_chunk(const StageContext& ctx, std::uint64_t first, std::uint64_t last,
               std::vector<StageSolution>& out) {
    std::vector<std::uint64_t> rows = ctx.base_rows;
    toggle_c_bit(rows, ctx.pair.g, static_cast<std::size_t>(ctx.dc), ctx.m);
    std::uint64_t gray = first ^ (first >> 1);
    std::uint64_t gbits = gray;
    while (gbits) {
        const int j = std::countr_zero(gbits);
        gbits &= gbits - 1;
        toggle_c_bit(rows, ctx.pair.g, static_cast<std::size_t>(j), ctx.m);
    }
    std::vector<std::uint64_t> scratch(rows.size());
    for (std::uint64_t k = first; k < last; ++k) {
        scratch.assign(rows.begin(), rows.end());
        solve_candidate(ctx, scratch, k, out);
        if (k + 1 < last) {
            const int j = std::countr_zero(k + 1);
            toggle_c_bit(rows, ctx.pair.g, static_cast<std::size_t>(j), ctx.m);
        }
    }
}

std::vector<DescentTriple> run_stage(const StageContext& ctx, int workers,
                                     std::uint64_t* candidates) {
    std::vector<StageSolution> sols;
    if (ctx.dc < 0) return {};
    const std::uint64_t total = std::uint64_t(1) << ctx.dc;
    if (candidates) *candidates += total;

    workers = thread_budget(workers);
    if (workers > 1 && total >= (std::uint64_t(1) << 16)) {
        const std::uint64_t n_chunks =
            std::min<std::uint64_t>(total >> 12, static_cast<std::uint64_t>(workers) * 8);
        std::vector<std::vector<StageSolution>> parts(n_chunks);
        parallel_for_dynamic(n_chunks, workers, [&](std::uint64_t i) {
            const std::uint64_t lo = total / n_chunks * i + std::min(i, total % n_chunks);
            const std::uint64_t hi = total / n_chunks * (i + 1) + std::min(i + 1, total % n_chunks);
            run_chunk(ctx, lo, hi, parts[i]);
        });
        for (auto& part : parts)
            sols.insert(sols.end(), part.begin(), part.end());
    } else {
        run_chunk(ctx, 0, total, sols);
    }

    std::vector<DescentTriple> out;
    out.reserve(sols.size());
    for (const auto& s : sols) {
        const Poly c = Poly::monomial(static_cast<std::size_t>(ctx.dc)) +
                       Poly::from_value(s.candidate ^ (s.candidate >> 1));
        out.push_back({c, s.d, ctx.e, ctx.pair});
    }
    return out;
}

void require_search_preconditions(const ParamPair& pair) {
    if (classify_type(pair) != OrbitClass::Type3)
        throw std::invalid_argument("search: pair is not a Type 3 minimal representative");
    if (pair.h.is_zero()) throw std::invalid_argument("search: h must be nonzero");
    if (divides(pair.h, pair.g))
        throw std::invalid_argument("search: h | g is handled by the closed form");
}

}  // namespace

std::vector<DescentTriple> solve_stage(const ParamPair& pair, const Poly& e, int m) {
    return solve_stage(pair, e, m, {}, 1, nullptr);
}

std::vector<DescentTriple> solve_stage(const ParamPair& pair, const Poly& e, int m,
                                       const std::vector<std::pair<Poly, int>>& d_floors,
                                       int workers, std::uint64_t* candidates) {
    require_search_preconditions(pair);
    const StageContext ctx = make_stage_context(pair, e, m, d_floors);
    return run_stage(ctx, workers, candidates);
}

std::vector<std::pair<Poly, int>> d_valuation_floors(const ParamPair& pair, const Poly& e,
                                                     const Factorization& fac_g) {
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [p, eg] : fac_g.factors) {
        if (eg < 2) continue;  // nu_p(b) >= nu_p(g) - 1 is vacuous below multiplicity 2
        if (!split_h_at_prime(pair.h, p).applicable) continue;
        const int have = divides(p, e) ? 1 : 0;
        const int need = static_cast<int>(eg) - 1 - have;
        if (need <= 0) continue;
        out.emplace_back(p, (need + 1) / 2);
    }
    return out;
}

bool prune_stage(const ParamPair& pair, const Poly& e, int m, const Factorization& fac_g) {
    // an irreducible g forces b to be a square, i.e. e = b_r = 1
    if (fac_g.factors.size() == 1 && fac_g.factors[0].second == 1 &&
        fac_g.factors[0].first.degree() >= Degree(1) && !e.is_one())
        return true;
    for (const auto& [p, k] : d_valuation_floors(pair, e, fac_g))
        if (k * static_cast<int>(p.degree_index()) > m) return true;
    return false;
}

std::optional<RingElem> find_fundamental_unit(const ParamPair& pair, const SearchBudget& budget,
                                              const SearchOptions& opts, SearchStats* stats) {
    require_search_preconditions(pair);
    if (budget.max_deg_b < 0 || budget.max_deg_b > 126)
        throw std::invalid_argument("find_fundamental_unit: max_deg_b must be in [0, 126]");

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    const auto t0 = std::chrono::steady_clock::now();
    const auto past_deadline = [&] {
        if (!budget.time_limit_seconds) return false;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        return dt.count() > *budget.time_limit_seconds;
    };

    const Factorization fac_g = factor(pair.g);
    const std::vector<Poly> divisors = squarefree_divisors_proper(pair.g);
    const int gbar = pair.g.degree().value();
    const int hbar = pair.h.degree().value();

    // stage constraints per divisor, computed once
    std::vector<std::vector<std::pair<Poly, int>>> floors(divisors.size());
    if (opts.prune)
        for (std::size_t i = 0; i < divisors.size(); ++i)
            floors[i] = d_valuation_floors(pair, divisors[i], fac_g);

    for (int target = 1; target <= budget.max_deg_b; ++target) {
        for (std::size_t ei = 0; ei < divisors.size(); ++ei) {
            const Poly& e = divisors[ei];
            const int de = e.is_one() ? 0 : static_cast<int>(e.degree_index());
            if ((target - de) < 2 || (target - de) % 2 != 0) continue;
            const int m = (target - de) / 2;
            if (m + hbar - gbar < 0) continue;  // vacuous degree shape
            if (opts.prune && prune_stage(pair, e, m, fac_g)) {
                ++st.stages_pruned;
                continue;
            }
            ++st.stages_examined;
            const StageContext ctx = make_stage_context(pair, e, m, floors[ei]);
            const auto sols = run_stage(ctx, opts.workers, &st.candidates_tested);
            if (!sols.empty()) {
                st.found_e = e;
                st.found_m = m;
                st.last_target = target;
                return lift(sols.front());
            }
        }
        st.last_target = target;
        if (past_deadline()) {
            st.time_limited = true;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

UnitGroupResult unit_group(const ParamPair& pair, const SearchBudget& budget,
                           const SearchOptions& opts) {
    UnitGroupResult res;
    const MinimalRep mr = minimal_representative(pair);
    res.reduced = mr.pair;
    res.reduced_type = mr.type;
    res.shift = mr.shift;

    const Poly& g = mr.pair.g;
    const Poly& h = mr.pair.h;

    const auto finish = [&](Verdict v, const RingElem& reduced_unit, std::string prov) {
        // Transport through y -> y + shift; report the smaller of the unit
        // and its inverse (same b, comparable a).
        const Poly ta = reduced_unit.a + reduced_unit.b * mr.shift;
        RingElem u1{ta, reduced_unit.b, pair};
        RingElem u2{ta + reduced_unit.b * g, reduced_unit.b, pair};
        RingElem picked = (u2.a < u1.a) ? std::move(u2) : std::move(u1);
        if (!verify_unit(picked))
            throw std::logic_error("unit_group: transported unit failed verification");
        res.verdict = v;
        res.unit = std::move(picked);
        res.provenance = std::move(prov);
        return res;
    };
    const auto trivial = [&](std::string prov) {
        res.verdict = Verdict::Trivial;
        res.provenance = std::move(prov);
        return res;
    };

    // holds in any representative, minimal or not
    if (pair.g.degree() >= Degree(1) && divides(pair.g.square(), pair.h))
        return trivial("g^2 divides h");

    if (g.is_zero()) {
        if (h.is_zero())
            return finish(Verdict::AdditiveFx, {Poly::one(), Poly::one(), mr.pair},
                          "g = 0, h a square: units are 1 + ry");
        return trivial("g = 0, h not a square");
    }
    if (h.is_zero()) return trivial("h = 0: ring splits along y and y + g");
    if (g.is_one()) {
        if (h.is_one())
            return finish(Verdict::OrderThree, {Poly::zero(), Poly::one(), mr.pair},
                          "g = 1, h = f^2 + f + 1: order-3 unit group");
        return trivial("g = 1, reduced h of odd degree");
    }

    switch (mr.type) {
        case OrbitClass::Type1: return trivial("Type 1: degree obstruction");
        case OrbitClass::Type2: return trivial("Type 2 with deg g > 0: degree obstruction");
        case OrbitClass::NotMinimal:
            throw std::logic_error("unit_group: reduction returned a non-minimal pair");
        case OrbitClass::Type3: break;
    }

    if (divides(h, g)) {
        const RingElem gen = h.is_one()
                                 ? RingElem{Poly::zero(), Poly::one(), mr.pair}
                                 : RingElem{Poly::one(), divrem(g, h).quot, mr.pair};
        return finish(Verdict::InfiniteCyclic, gen, "h divides g: explicit generator");
    }

    const auto found = find_fundamental_unit(mr.pair, budget, opts, &res.stats);
    if (found) {
        std::string prov = "search: e=" + format_poly(res.stats.found_e) +
                           ", m=" + std::to_string(res.stats.found_m) +
                           ", deg b=" + std::to_string(res.stats.last_target);
        return finish(Verdict::InfiniteCyclic, *found, std::move(prov));
    }
    res.verdict = Verdict::Unknown;
    res.max_deg_b_searched = res.stats.time_limited ? res.stats.last_target : budget.max_deg_b;
    res.provenance = res.stats.time_limited ? "search stopped by time limit" : "search budget exhausted";
    return res;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: plain enumeration of (a, b) with incremental updates of
// Q(a, b) = a^2 + a(bg) + b^2 h along a Gray walk over a.
// ---------------------------------------------------------------------------

std::vector<RingElem> brute_force_oracle(const ParamPair& pair, int max_deg_b) {
    if (max_deg_b < 0 || max_deg_b > 40)
        throw std::invalid_argument("brute_force_oracle: max_deg_b out of desk range");
    const int dg = pair.g.is_zero() ? 0 : static_cast<int>(pair.g.degree_index());
    const int dh = pair.h.is_zero() ? 0 : static_cast<int>(pair.h.degree_index());
    const int max_deg_a = max_deg_b + std::max(dg, dh);
    if (max_deg_a > 40) throw std::invalid_argument("brute_force_oracle: degree bound out of desk range");

    const int q_bits = std::max({2 * max_deg_a, max_deg_a + max_deg_b + dg, 2 * max_deg_b + dh}) + 1;
    const std::size_t n_words = static_cast<std::size_t>(q_bits + 63) / 64;
    const std::size_t n_deltas = static_cast<std::size_t>(max_deg_a) + 1;

    std::vector<RingElem> out;
    std::vector<std::uint64_t> q(n_words), deltas(n_deltas * n_words);
    std::vector<std::pair<Poly, Poly>> hits;  // (a, b)

    auto load = [&](std::span<std::uint64_t> dst, const Poly& p) {
        std::fill(dst.begin(), dst.end(), 0);
        std::copy(p.words().begin(), p.words().end(), dst.begin());
    };

    for (std::uint64_t bv = 1; bv < (std::uint64_t(1) << (max_deg_b + 1)); ++bv) {
        const Poly b = Poly::from_value(bv);
        const Poly bg = b * pair.g;
        load(q, b.square() * pair.h);  // Q at a = 0
        for (std::size_t j = 0; j < n_deltas; ++j)
            load(std::span(deltas).subspan(j * n_words, n_words),
                 Poly::monomial(2 * j) + bg.shifted_left(j));

        hits.clear();
        auto record = [&](std::uint64_t k) { hits.emplace_back(Poly::from_value(k ^ (k >> 1)), b); };

        const std::uint64_t a_count = std::uint64_t(1) << (max_deg_a + 1);
        if (n_words == 1) {
            std::uint64_t qw = q[0];
            if (qw == 1) record(0);
            for (std::uint64_t k = 1; k < a_count; ++k) {
                qw ^= deltas[static_cast<std::size_t>(std::countr_zero(k))];
                if (qw == 1) record(k);
            }
        } else {
            bool one = (q[0] == 1);
            for (std::size_t w = 1; w < n_words; ++w) one = one && q[w] == 0;
            if (one) record(0);
            for (std::uint64_t k = 1; k < a_count; ++k) {
                const std::uint64_t* d = &deltas[static_cast<std::size_t>(std::countr_zero(k)) * n_words];
                bool is_one = true;
                for (std::size_t w = 0; w < n_words; ++w) {
                    q[w] ^= d[w];
                    is_one = is_one && q[w] == (w == 0 ? 1u : 0u);
                }
                if (is_one) record(k);
            }
        }
        for (auto& [a, b2] : hits) out.push_back({std::move(a), std::move(b2), pair});
    }

    std::sort(out.begin(), out.end(), [](const RingElem& u, const RingElem& v) {
        if (u.b.degree() != v.b.degree()) return u.b.degree() < v.b.degree();
        if (u.a.degree() != v.a.degree()) return u.a.degree() < v.a.degree();
        if (u.b != v.b) return u.b < v.b;
        return u.a < v.a;
    });
    return out;
}

}  // namespace ugq
