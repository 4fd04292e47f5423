#ifndef UGQ_TESTS_SUPPORT_HPP
#define UGQ_TESTS_SUPPORT_HPP

#include <random>

#include "ugq/gf2poly.hpp"

namespace ugq::test {

// uniform polynomial of degree < deg_bound (may be zero)
inline Poly random_poly(std::mt19937_64& rng, std::size_t deg_bound) {
    std::vector<std::uint64_t> w((deg_bound + 63) / 64, 0);
    for (auto& word : w) word = rng();
    if (deg_bound % 64) w.back() &= (std::uint64_t(1) << (deg_bound % 64)) - 1;
    return Poly::from_words(std::move(w));
}

// uniform nonzero polynomial of degree exactly deg
inline Poly random_poly_exact(std::mt19937_64& rng, std::size_t deg) {
    Poly p = random_poly(rng, deg);
    return p + Poly::monomial(deg);
}

inline Poly P(const char* text) { return parse_poly(text); }

}  // namespace ugq::test

#endif
