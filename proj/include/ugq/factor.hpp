#ifndef UGQ_FACTOR_HPP
#define UGQ_FACTOR_HPP

#include <utility>
#include <vector>

#include "ugq/gf2poly.hpp"

namespace ugq {

/// Prime factorization of a nonzero F2[x] polynomial: distinct irreducible
/// factors with multiplicities, sorted by (degree, bit encoding).
struct Factorization {
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly product() const;
    bool is_squarefree() const {
        for (const auto& [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
};

/// Factor a nonzero polynomial into irreducibles. Deterministic: the
/// equal-degree splitting draws randomness from a fixed-seed generator
/// local to the call.
Factorization factor(const Poly& f);

/// Rabin irreducibility test. f must be nonzero; constants are not irreducible.
bool is_irreducible(const Poly& f);

/// All squarefree divisors of g except g itself (the set E of the search).
/// Always contains 1; sorted by (degree, bit encoding).
std::vector<Poly> squarefree_divisors_proper(const Poly& g);

/// p = squarefree_part * square_root_part^2 with squarefree_part squarefree.
struct SquarefreeDecomposition {
    Poly squarefree_part;
    Poly square_root_part;
};
SquarefreeDecomposition squarefree_decompose(const Poly& p, const Factorization& fac);

/// Largest k with q^k | p. p nonzero, q irreducible.
int valuation(const Poly& p, const Poly& q);

/// Square root in the field F2[x]/(p), p irreducible: returns s with
/// s^2 = t (mod p), deg s < deg p. Frobenius is bijective, so s exists.
Poly sqrt_mod_irreducible(const Poly& t, const Poly& p);

}  // namespace ugq

#endif
