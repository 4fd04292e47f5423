#ifndef UGQ_RING_HPP
#define UGQ_RING_HPP

#include <string>
#include <vector>

#include "ugq/factor.hpp"
#include "ugq/gf2poly.hpp"
#include "ugq/orbit.hpp"

namespace ugq {

/// Element a + by of F2[x,y]/(y^2 + gy + h), in normal form. Carries its
/// ambient (g, h) so cross-ring arithmetic is rejected instead of silently
/// computing garbage.
struct RingElem {
    Poly a;
    Poly b;
    ParamPair ambient;
    bool operator==(const RingElem&) const = default;

    bool is_identity() const { return a.is_one() && b.is_zero(); }
};

inline RingElem ring_one(const ParamPair& ambient) { return {Poly::one(), Poly::zero(), ambient}; }

/// Q(X, Y) = X^2 + g XY + h Y^2. Units of the ring are exactly the pairs
/// representing 1.
Poly eval_quadratic_form(const ParamPair& pair, const Poly& X, const Poly& Y);

RingElem mul_ring(const RingElem& u, const RingElem& v);

bool verify_unit(const RingElem& u);

/// (a + by)^-1 = (a + bg) + by for units.
RingElem inverse_unit(const RingElem& u);

RingElem pow(const RingElem& u, unsigned k);

/// 2^n-th power via the closed form for the y-coordinate, b^(2^n) g^(2^n - 1);
/// the a-coordinate comes from repeated squaring. Agrees with pow(u, 2^n).
RingElem pow2n_closed(const RingElem& u, unsigned n);

/// Degree dichotomy for nontrivial units of Type 3 rings with deg h > 0:
///   CaseI:  deg a = deg b + deg h - deg g
///   CaseII: deg a = deg b + deg g
/// Inversion swaps the cases.
enum class UnitCase { CaseI, CaseII };
const char* to_string(UnitCase c);
UnitCase classify_case(const RingElem& u);

/// Witness of Q(c, d) = g/e with e squarefree dividing g. Lifts to the unit
/// (1 + cde, ed^2); conversely every unit with b != 0 descends to one via
/// (c, d, e) = ((1+a)/(b_r b_s), b_s, b_r).
struct DescentTriple {
    Poly c;
    Poly d;
    Poly e;
    ParamPair ambient;
};

DescentTriple descend(const RingElem& u);
RingElem lift(const DescentTriple& t);

/// One failed fundamental-unit constraint.
struct ConstraintViolation {
    int rule;  // 1: g | b, 2: g irreducible but b not a square, 3: nu_p(b) < nu_p(g) - 1
    Poly prime;
    std::string detail;
};

/// Checks the necessary conditions a fundamental unit with deg b > 0 must
/// satisfy. fac_g must be the factorization of the ambient g. Empty result
/// means no violation.
std::vector<ConstraintViolation> check_fund_constraints(const RingElem& u,
                                                        const Factorization& fac_g);

/// Splits h = h1 * p + h2^2 at an irreducible p; `applicable` iff p does not
/// divide h1 (the multiplicity-constraint hypothesis). The split is computed
/// from the square root of h in F2[x]/(p), and applicability does not depend
/// on the choice of root.
struct HSplit {
    bool applicable = false;
    Poly h1;
    Poly h2;
};
HSplit split_h_at_prime(const Poly& h, const Poly& p);

/// Involutions of the unit set when h | g, h != g, on a Type 3 minimal
/// representative: sigma1 is inversion; sigma2 is inversion followed by
/// multiplication with the fundamental unit.
RingElem sigma1(const RingElem& u);
RingElem sigma2(const RingElem& u);

}  // namespace ugq

#endif
