#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "ugq/factor.hpp"

using namespace ugq;
using ugq::test::P;
using ugq::test::random_poly;

namespace {

// reference irreducibility by trial division, for small degrees
bool irreducible_by_trial_division(const Poly& f) {
    if (f.is_zero() || f.is_one()) return false;
    const std::size_t d = f.degree_index();
    if (d == 0) return false;
    for (std::uint64_t v = 2; v < (std::uint64_t(1) << (d / 2 + 1)); ++v) {
        const Poly q = Poly::from_value(v);
        if (q.degree_index() >= 1 && divrem(f, q).rem.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("factor examples") {
    const Factorization f1 = factor(P("x^6+x^2"));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0] == std::pair{P("x"), 2u});
    CHECK(f1.factors[1] == std::pair{P("x+1"), 4u});

    const Factorization f2 = factor(P("x^2+x+1"));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == std::pair{P("x^2+x+1"), 1u});

    CHECK(factor(Poly::one()).factors.empty());
    CHECK_THROWS_AS(factor(Poly::zero()), std::invalid_argument);
}

TEST_CASE("factor round-trip on random inputs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10000; ++i) {
        Poly f = random_poly(rng, 1 + static_cast<std::size_t>(rng() % 64));
        if (f.is_zero()) f = Poly::one();
        const Factorization fac = factor(f);
        CHECK(fac.product() == f);
        CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; }));
        for (const auto& [p, e] : fac.factors) {
            CHECK(e >= 1);
            CHECK(is_irreducible(p));
        }
    }
}

TEST_CASE("factor output is reproducible") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        const Poly f = random_poly(rng, 48) + Poly::monomial(48);
        const Factorization a = factor(f), b = factor(f);
        CHECK(a.factors == b.factors);
    }
}

TEST_CASE("is_irreducible examples") {
    CHECK(is_irreducible(P("x^3+x+1")));
    CHECK_FALSE(is_irreducible(P("x^2+1")));
    CHECK_FALSE(is_irreducible(Poly::one()));
    CHECK(is_irreducible(P("x")));
    CHECK(is_irreducible(P("x+1")));
    CHECK(is_irreducible(P("x^2+x+1")));
    CHECK_FALSE(is_irreducible(P("x^2")));
    CHECK_THROWS_AS(is_irreducible(Poly::zero()), std::invalid_argument);
}

TEST_CASE("is_irreducible agrees with trial division up to degree 12") {
    for (std::uint64_t v = 1; v < (1u << 13); ++v) {
        const Poly f = Poly::from_value(v);
        CHECK(is_irreducible(f) == irreducible_by_trial_division(f));
    }
}

TEST_CASE("squarefree_divisors_proper") {
    CHECK(squarefree_divisors_proper(P("x^3")) == std::vector{Poly::one(), P("x")});
    CHECK(squarefree_divisors_proper(P("x^2+x")) ==
          std::vector{Poly::one(), P("x"), P("x+1")});
    CHECK(squarefree_divisors_proper(P("x^2+x+1")) == std::vector{Poly::one()});
    CHECK_THROWS_AS(squarefree_divisors_proper(Poly::zero()), std::invalid_argument);

    // count: 2^k minus one when g itself is squarefree
    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        Poly g = random_poly(rng, 1 + static_cast<std::size_t>(rng() % 14));
        if (g.is_zero() || g.is_one()) continue;
        const Factorization fac = factor(g);
        const std::size_t k = fac.factors.size();
        const auto divs = squarefree_divisors_proper(g);
        const std::size_t expected = (std::size_t(1) << k) - (fac.is_squarefree() ? 1 : 0);
        CHECK(divs.size() == expected);
        for (const Poly& e : divs) {
            CHECK(divides(e, g));
            CHECK((e.is_one() || gcd(e, derivative(e)).is_one()));
        }
        CHECK(std::is_sorted(divs.begin(), divs.end()));
    }
}

TEST_CASE("squarefree_decompose") {
    const Poly x3 = P("x^3");
    const auto d1 = squarefree_decompose(x3, factor(x3));
    CHECK(d1.squarefree_part == P("x"));
    CHECK(d1.square_root_part == P("x"));

    const Poly f = P("x^6+x^2");
    const auto d2 = squarefree_decompose(f, factor(f));
    CHECK(d2.squarefree_part == Poly::one());
    CHECK(d2.square_root_part == P("x^3+x"));

    const Poly sf = P("x^3+x+1");
    const auto d3 = squarefree_decompose(sf, factor(sf));
    CHECK(d3.squarefree_part == sf);
    CHECK(d3.square_root_part == Poly::one());

    CHECK_THROWS_AS(squarefree_decompose(Poly::zero(), Factorization{}), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_decompose(P("x^2"), factor(P("x"))), std::invalid_argument);

    std::mt19937_64 rng(53);
    for (int i = 0; i < 2000; ++i) {
        Poly p = random_poly(rng, 40);
        if (p.is_zero()) p = Poly::one();
        const auto d = squarefree_decompose(p, factor(p));
        CHECK(d.squarefree_part * d.square_root_part.square() == p);
        // derivative witness of squarefreeness
        CHECK((d.squarefree_part.is_one() ||
               gcd(d.squarefree_part, derivative(d.squarefree_part)).is_one()));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(P("x^10+x^6+x^4+x^2"), P("x")) == 2);
    CHECK(valuation(P("x^2+1"), P("x+1")) == 2);
    CHECK(valuation(Poly::one(), P("x")) == 0);
    CHECK_THROWS_AS(valuation(Poly::zero(), P("x")), std::invalid_argument);
    CHECK_THROWS_AS(valuation(P("x^3"), P("x^2+1")), std::invalid_argument);
    CHECK_THROWS_AS(valuation(P("x^3"), Poly::one()), std::invalid_argument);

    // ultrametric inequality, with equality at distinct valuations
    std::mt19937_64 rng(59);
    const Poly p = P("x^2+x+1");
    for (int i = 0; i < 500; ++i) {
        Poly f = random_poly(rng, 30), g = random_poly(rng, 30);
        if (f.is_zero() || g.is_zero() || (f + g).is_zero()) continue;
        const int vf = valuation(f, p), vg = valuation(g, p), vs = valuation(f + g, p);
        CHECK(vs >= std::min(vf, vg));
        if (vf != vg) CHECK(vs == std::min(vf, vg));
    }
}

TEST_CASE("sqrt_mod_irreducible") {
    std::mt19937_64 rng(61);
    const Poly mods[] = {P("x"), P("x+1"), P("x^2+x+1"), P("x^3+x+1"), P("x^4+x+1")};
    for (const Poly& p : mods) {
        for (int i = 0; i < 100; ++i) {
            const Poly t = random_poly(rng, 12);
            const Poly s = sqrt_mod_irreducible(t, p);
            CHECK(divrem(s.square() + t, p).rem.is_zero());
            CHECK(s.degree() < p.degree());
        }
    }
}
