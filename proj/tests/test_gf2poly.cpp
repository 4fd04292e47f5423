#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "ugq/gf2poly.hpp"

using namespace ugq;
using ugq::test::P;
using ugq::test::random_poly;

TEST_CASE("degree conventions") {
    CHECK(Poly::zero().degree().is_neg_inf());
    CHECK(Poly::one().degree() == Degree(0));
    CHECK(P("x^7+x").degree() == Degree(7));
    CHECK(Degree::neg_inf() < Degree(-5));
    CHECK(Degree::neg_inf() + Degree(3) == Degree::neg_inf());
    CHECK(Degree(2) + Degree(3) == Degree(5));
    CHECK(Degree::neg_inf().twice().is_neg_inf());
    CHECK_FALSE(Degree::neg_inf().odd());
    CHECK(Degree(3).odd());
    CHECK_THROWS_AS(Degree::neg_inf().value(), std::logic_error);
}

TEST_CASE("multiplication basics") {
    CHECK(P("x+1") * P("x+1") == P("x^2+1"));  // squaring is coefficient spreading
    CHECK(P("x^3") * P("x^2") == P("x^5"));
    CHECK(P("x^2+x+1") * P("x^3+x") == P("x^5+x^4+x^2+x"));
    CHECK(P("0") * P("x^5") == Poly::zero());
    CHECK((Poly::zero().degree() + P("x^3").degree()).is_neg_inf());
}

TEST_CASE("mul degree law and Karatsuba consistency") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        const Poly a = random_poly(rng, 1 + static_cast<std::size_t>(rng() % 2100));
        const Poly b = random_poly(rng, 1 + static_cast<std::size_t>(rng() % 2100));
        const Poly ab = a * b;
        CHECK(ab.degree() == a.degree() + b.degree());
        // cross-check the fast product against an independent shift-XOR
        if (i % 37 == 0) {
            Poly ref;
            if (!a.is_zero() && !b.is_zero())
                for (std::size_t j = 0; j <= a.degree_index(); ++j)
                    if (a.bit(j)) ref += b.shifted_left(j);
            CHECK(ref == ab);
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Poly a = random_poly(rng, 256), b = random_poly(rng, 256), c = random_poly(rng, 256);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + a).is_zero());
    }
}

TEST_CASE("divrem examples") {
    auto [q1, r1] = divrem(P("x^4+x^2+x+1"), P("x+1"));
    CHECK(q1 == P("x^3+x^2+1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = divrem(P("x^2"), P("x^3"));
    CHECK(q2.is_zero());
    CHECK(r2 == P("x^2"));

    auto [q3, r3] = divrem(P("x^9+x^3+1"), Poly::one());
    CHECK(q3 == P("x^9+x^3+1"));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(divrem(P("x"), Poly::zero()), std::invalid_argument);
}

TEST_CASE("divrem round-trip on random pairs") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Poly p = random_poly(rng, 300);
        Poly q = random_poly(rng, 1 + static_cast<std::size_t>(rng() % 150));
        if (q.is_zero()) q = Poly::one();
        const auto [quot, rem] = divrem(p, q);
        CHECK(p == q * quot + rem);
        CHECK(rem.degree() < q.degree());
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2+1"), P("x+1")) == P("x+1"));
    CHECK(gcd(P("x^3"), P("x^2+x")) == P("x"));
    CHECK(gcd(P("x^5+x^2"), Poly::zero()) == P("x^5+x^2"));
    CHECK_THROWS_AS(gcd(Poly::zero(), Poly::zero()), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const Poly a = random_poly(rng, 80), b = random_poly(rng, 80);
        if (a.is_zero() && b.is_zero()) continue;
        const Poly d = gcd(a, b);
        if (!a.is_zero()) CHECK(divrem(a, d).rem.is_zero());
        if (!b.is_zero()) CHECK(divrem(b, d).rem.is_zero());
    }
}

TEST_CASE("sqrt_exact and Frobenius") {
    CHECK(*sqrt_exact(P("x^10+x^6+x^4+x^2")) == P("x^5+x^3+x^2+x"));
    CHECK(*sqrt_exact(P("x^2")) == P("x"));
    CHECK_FALSE(sqrt_exact(P("x+1")).has_value());
    CHECK(*sqrt_exact(Poly::zero()) == Poly::zero());

    std::mt19937_64 rng(19);
    for (int i = 0; i < 1000; ++i) {
        const Poly p = random_poly(rng, 200);
        const Poly sq = p.square();
        CHECK(sq == p * p);
        for (std::size_t j = 0; !sq.is_zero() && j <= sq.degree_index(); ++j)
            if (sq.bit(j)) CHECK(j % 2 == 0);
        CHECK(*sqrt_exact(sq) == p);
    }
}

TEST_CASE("derivative kills even exponents") {
    CHECK(derivative(P("x^2")) == Poly::zero());
    CHECK(derivative(P("x^3+x^2+x+1")) == P("x^2+1"));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const Poly p = random_poly(rng, 150);
        CHECK(derivative(p.square()).is_zero());
        // product rule
        const Poly q = random_poly(rng, 150);
        CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
    }
}

TEST_CASE("subst_x_plus1") {
    CHECK(subst_x_plus1(P("x^2")) == P("x^2+1"));
    CHECK(subst_x_plus1(P("x^2+x")) == P("x^2+x"));
    CHECK(subst_x_plus1(Poly::one()) == Poly::one());
    CHECK(subst_x_plus1(P("x")) == P("x+1"));

    std::mt19937_64 rng(29);
    for (int i = 0; i < 500; ++i) {
        const Poly p = random_poly(rng, 300), q = random_poly(rng, 300);
        CHECK(subst_x_plus1(subst_x_plus1(p)) == p);
        CHECK(subst_x_plus1(p + q) == subst_x_plus1(p) + subst_x_plus1(q));
        CHECK(subst_x_plus1(p * q) == subst_x_plus1(p) * subst_x_plus1(q));
    }
}

TEST_CASE("parse and format") {
    CHECK(parse_poly("x^3+x+1") == Poly::from_bits({3, 1, 0}));
    CHECK(parse_poly("0x25") == Poly::from_bits({5, 2, 0}));
    CHECK(parse_poly("0") == Poly::zero());
    CHECK(format_poly(Poly::zero()) == "0");
    CHECK(format_poly(Poly::from_bits({5, 2, 0})) == "x^5+x^2+1");
    CHECK(format_poly(P("x")) == "x");
    CHECK(parse_poly(" x^2 + x ") == P("x^2+x"));
    CHECK(parse_poly("0x0") == Poly::zero());
    CHECK(parse_poly("0xAbC") == parse_poly("0xabc"));

    CHECK_THROWS_AS(parse_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^1"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^0"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x+x"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x+0"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("0+x"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x+"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("+x"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("y"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("0xg"), PolyParseError);

    try {
        parse_poly("x^2+q");
    } catch (const PolyParseError& e) {
        CHECK(e.position == 4);
    }

    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const Poly p = random_poly(rng, 200);
        CHECK(parse_poly(format_poly(p)) == p);
    }
}

TEST_CASE("poly ordering is degree-major") {
    CHECK(P("x") < P("x+1"));
    CHECK(P("x+1") < P("x^2"));
    CHECK(P("x^2") < P("x^2+1"));
    CHECK(Poly::zero() < Poly::one());
}
