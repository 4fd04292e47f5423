#include "ugq/ring.hpp"

namespace ugq {

namespace {

void require_same_ambient(const RingElem& u, const RingElem& v) {
    if (!(u.ambient == v.ambient))
        throw std::invalid_argument("ring: elements live in different ambient rings");
}

bool squarefree_nonzero(const Poly& e) {
    if (e.is_zero()) return false;
    if (e.is_one()) return true;
    return gcd(e, derivative(e)).is_one();
}

}  // namespace

const char* to_string(UnitCase c) { return c == UnitCase::CaseI ? "CaseI" : "CaseII"; }

Poly eval_quadratic_form(const ParamPair& pair, const Poly& X, const Poly& Y) {
    return X.square() + X * Y * pair.g + Y.square() * pair.h;
}

RingElem mul_ring(const RingElem& u, const RingElem& v) {
    require_same_ambient(u, v);
    const Poly bd = u.b * v.b;
    return {u.a * v.a + bd * u.ambient.h, u.a * v.b + u.b * v.a + bd * u.ambient.g, u.ambient};
}

bool verify_unit(const RingElem& u) {
    return eval_quadratic_form(u.ambient, u.a, u.b).is_one();
}

RingElem inverse_unit(const RingElem& u) {
    if (!verify_unit(u)) throw std::invalid_argument("inverse_unit: not a unit");
    return {u.a + u.b * u.ambient.g, u.b, u.ambient};
}

RingElem pow(const RingElem& u, unsigned k) {
    RingElem r = ring_one(u.ambient);
    RingElem b = u;
    while (k) {
        if (k & 1) r = mul_ring(r, b);
        k >>= 1;
        if (k) b = mul_ring(b, b);
    }
    return r;
}

RingElem pow2n_closed(const RingElem& u, unsigned n) {
    if (n == 0) return u;
    // a-coordinate by repeated squaring; y-coordinate in closed form
    RingElem sq = u;
    for (unsigned i = 0; i < n; ++i) sq = mul_ring(sq, sq);
    Poly bp = u.b;
    Poly gp = Poly::one();
    Poly gsq = u.ambient.g;
    for (unsigned i = 0; i < n; ++i) {
        bp = bp.square();
        gp = gp * gsq;
        gsq = gsq.square();
    }
    const Poly closed_b = bp * gp;  // b^(2^n) g^(2^n - 1)
    if (closed_b != sq.b)
        throw std::logic_error("pow2n_closed: closed form disagrees with squaring");
    return {sq.a, closed_b, u.ambient};
}

UnitCase classify_case(const RingElem& u) {
    const ParamPair& amb = u.ambient;
    if (classify_type(amb) != OrbitClass::Type3)
        throw std::invalid_argument("classify_case: ambient is not a Type 3 minimal representative");
    if (!(amb.h.degree() > Degree(0)))
        throw std::invalid_argument("classify_case: requires deg h > 0");
    if (!verify_unit(u) || u.b.is_zero())
        throw std::invalid_argument("classify_case: requires a nontrivial unit");
    const Degree da = u.a.degree(), db = u.b.degree();
    const int dg = amb.g.degree().value(), dh = amb.h.degree().value();
    if (da == Degree(db.value() + dh - dg)) return UnitCase::CaseI;
    if (da == Degree(db.value() + dg)) return UnitCase::CaseII;
    throw std::logic_error("classify_case: unit satisfies neither degree relation");
}

DescentTriple descend(const RingElem& u) {
    if (!verify_unit(u)) throw std::invalid_argument("descend: not a unit");
    if (u.b.is_zero()) throw std::invalid_argument("descend: trivial unit");
    const auto split = squarefree_decompose(u.b, factor(u.b));
    const Poly& br = split.squarefree_part;
    const Poly& bs = split.square_root_part;
    const auto [c, rem] = divrem(u.a + Poly::one(), br * bs);
    if (!rem.is_zero()) throw std::logic_error("descend: b_r b_s does not divide 1 + a");
    return {c, bs, br, u.ambient};
}

RingElem lift(const DescentTriple& t) {
    if (!squarefree_nonzero(t.e)) throw std::invalid_argument("lift: e is not squarefree");
    const auto [q, rem] = divrem(t.ambient.g, t.e);
    if (!rem.is_zero()) throw std::invalid_argument("lift: e does not divide g");
    if (eval_quadratic_form(t.ambient, t.c, t.d) != q)
        throw std::invalid_argument("lift: Q(c, d) != g/e");
    RingElem u{Poly::one() + t.c * t.d * t.e, t.e * t.d.square(), t.ambient};
    if (!verify_unit(u)) throw std::logic_error("lift: result failed unit verification");
    return u;
}

HSplit split_h_at_prime(const Poly& h, const Poly& p) {
    HSplit out;
    out.h2 = sqrt_mod_irreducible(h, p);
    const auto [h1, rem] = divrem(h + out.h2.square(), p);
    if (!rem.is_zero()) throw std::logic_error("split_h_at_prime: square root failed");
    out.h1 = h1;
    out.applicable = !h1.is_zero() && !divides(p, h1);
    return out;
}

std::vector<ConstraintViolation> check_fund_constraints(const RingElem& u,
                                                        const Factorization& fac_g) {
    if (!verify_unit(u)) throw std::invalid_argument("check_fund_constraints: not a unit");
    if (!(u.b.degree() > Degree(0)))
        throw std::invalid_argument("check_fund_constraints: requires deg b > 0");
    if (fac_g.product() != u.ambient.g)
        throw std::invalid_argument("check_fund_constraints: fac_g does not factor ambient g");

    std::vector<ConstraintViolation> out;
    const Poly& g = u.ambient.g;
    if (!g.is_zero() && divides(g, u.b))
        out.push_back({1, g, "g divides b"});
    if (fac_g.factors.size() == 1 && fac_g.factors[0].second == 1 &&
        fac_g.factors[0].first.degree() >= Degree(1)) {
        if (!sqrt_exact(u.b))
            out.push_back({2, g, "g irreducible but b is not a square"});
    }
    for (const auto& [p, eg] : fac_g.factors) {
        const HSplit split = split_h_at_prime(u.ambient.h, p);
        if (!split.applicable) continue;
        const int nu_b = valuation(u.b, p);
        if (nu_b < static_cast<int>(eg) - 1)
            out.push_back({3, p,
                           "nu_p(b) = " + std::to_string(nu_b) + " < nu_p(g) - 1 = " +
                               std::to_string(static_cast<int>(eg) - 1)});
    }
    return out;
}

namespace {

void require_h_divides_g_setting(const RingElem& u) {
    const ParamPair& amb = u.ambient;
    if (amb.h.is_zero() || !divides(amb.h, amb.g))
        throw std::invalid_argument("sigma: requires h | g with h nonzero");
    if (classify_type(amb) != OrbitClass::Type3)
        throw std::invalid_argument("sigma: requires a Type 3 minimal representative");
    if (!verify_unit(u)) throw std::invalid_argument("sigma: not a unit");
}

}  // namespace

RingElem sigma1(const RingElem& u) {
    require_h_divides_g_setting(u);
    return {u.a + u.b * u.ambient.g, u.b, u.ambient};
}

RingElem sigma2(const RingElem& u) {
    require_h_divides_g_setting(u);
    if (u.ambient.h.is_one()) return {u.b, u.a, u.ambient};
    const Poly q = divrem(u.ambient.g, u.ambient.h).quot;
    return {u.a, u.a * q + u.b, u.ambient};
}

}  // namespace ugq
