#include "ugq/factor.hpp"

#include <algorithm>
#include <random>

namespace ugq {

namespace {

constexpr std::uint64_t kEdfSeed = 0x9e3779b97f4a7c15ull;

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return divrem(a * b, mod).rem; }
Poly sqmod(const Poly& a, const Poly& mod) { return divrem(a.square(), mod).rem; }

Poly random_poly_below(std::size_t deg_bound, std::mt19937_64& rng) {
    // uniform over polynomials of degree < deg_bound
    std::vector<std::uint64_t> w((deg_bound + 63) / 64, 0);
    for (auto& word : w) word = rng();
    const std::size_t top = deg_bound % 64;
    if (top) w.back() &= (std::uint64_t(1) << top) - 1;
    return Poly::from_words(std::move(w));
}

// Cantor-Zassenhaus splitting of a squarefree product of irreducibles,
// all of degree d, via random trace polynomials.
void equal_degree_split(const Poly& f, std::size_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    if (f.degree_index() == d) {
        out.push_back(f);
        return;
    }
    while (true) {
        const Poly u = random_poly_below(f.degree_index(), rng);
        if (u.is_zero()) continue;
        // trace map u + u^2 + u^4 + ... + u^(2^(d-1)) mod f
        Poly t = u;
        Poly cur = u;
        for (std::size_t i = 1; i < d; ++i) {
            cur = sqmod(cur, f);
            t += cur;
        }
        if (t.is_zero()) continue;
        const Poly g = gcd(t, f);
        if (g.is_one() || g == f) continue;
        equal_degree_split(g, d, rng, out);
        equal_degree_split(divrem(f, g).quot, d, rng, out);
        return;
    }
}

// distinct-degree then equal-degree factorization of a squarefree input
void factor_squarefree(Poly f, std::mt19937_64& rng, std::vector<Poly>& out) {
    Poly frob = divrem(Poly::x().square(), f).rem;  // x^(2^i) mod f, starting at i=1
    std::size_t d = 1;
    while (!f.is_one() && 2 * d <= f.degree_index()) {
        const Poly g = gcd(frob + Poly::x(), f);
        if (!g.is_one()) {
            equal_degree_split(g, d, rng, out);
            f = divrem(f, g).quot;
            frob = divrem(frob, f).rem;
        }
        frob = sqmod(frob, f);
        ++d;
    }
    if (!f.is_one()) out.push_back(f);
}

}  // namespace

Poly Factorization::product() const {
    Poly r = Poly::one();
    for (const auto& [p, e] : factors) r = r * pow(p, e);
    return r;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    std::mt19937_64 rng(kEdfSeed);
    Factorization result;
    Poly rest = f;
    // peel off squares until the remaining part is handled
    unsigned mult_scale = 1;
    while (!rest.is_one()) {
        if (derivative(rest).is_zero()) {
            // rest is a perfect square
            rest = *sqrt_exact(rest);
            mult_scale *= 2;
            continue;
        }
        const Poly w = divrem(rest, gcd(rest, derivative(rest))).quot;  // odd-multiplicity radical
        std::vector<Poly> primes;
        factor_squarefree(w, rng, primes);
        for (const Poly& p : primes) {
            unsigned e = 0;
            while (divides(p, rest)) {
                rest = divrem(rest, p).quot;
                ++e;
            }
            result.factors.emplace_back(p, mult_scale * e);
        }
        // rest now holds the even-multiplicity part; loop squares it away
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
    if (f.is_one()) return false;
    const std::size_t d = f.degree_index();
    if (d == 0) return false;
    // x^(2^i) mod f for i = 1..d
    std::vector<Poly> frob(d + 1);
    frob[0] = divrem(Poly::x(), f).rem;
    for (std::size_t i = 1; i <= d; ++i) frob[i] = sqmod(frob[i - 1], f);
    if (frob[d] + divrem(Poly::x(), f).rem != Poly::zero()) return false;
    for (std::size_t q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool prime = true;
        for (std::size_t r = 2; r * r <= q; ++r)
            if (q % r == 0) { prime = false; break; }
        if (!prime) continue;
        if (!gcd(frob[d / q] + Poly::x(), f).is_one()) return false;
    }
    return true;
}

std::vector<Poly> squarefree_divisors_proper(const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("squarefree_divisors_proper: zero polynomial");
    const Factorization fac = factor(g);
    std::vector<Poly> primes;
    primes.reserve(fac.factors.size());
    for (const auto& [p, e] : fac.factors) primes.push_back(p);
    std::vector<Poly> out;
    out.reserve(std::size_t(1) << primes.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << primes.size()); ++mask) {
        Poly d = Poly::one();
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) d = d * primes[i];
        if (d == g && !d.is_one()) continue;  // exclude g itself
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SquarefreeDecomposition squarefree_decompose(const Poly& p, const Factorization& fac) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    if (fac.product() != p)
        throw std::invalid_argument("squarefree_decompose: factorization does not match");
    SquarefreeDecomposition out{Poly::one(), Poly::one()};
    for (const auto& [q, e] : fac.factors) {
        if (e & 1) out.squarefree_part = out.squarefree_part * q;
        if (e / 2) out.square_root_part = out.square_root_part * pow(q, e / 2);
    }
    return out;
}

int valuation(const Poly& p, const Poly& q) {
    if (p.is_zero()) throw std::invalid_argument("valuation: zero polynomial");
    if (!is_irreducible(q)) throw std::invalid_argument("valuation: modulus not irreducible");
    int k = 0;
    Poly rest = p;
    while (true) {
        auto [quot, rem] = divrem(rest, q);
        if (!rem.is_zero()) return k;
        rest = std::move(quot);
        ++k;
    }
}

Poly sqrt_mod_irreducible(const Poly& t, const Poly& p) {
    const Poly r = divrem(t, p).rem;
    if (r.is_zero()) return r;
    // In F_{2^d} the square root is the (d-1)-fold Frobenius image.
    Poly s = r;
    for (std::size_t i = 1; i < p.degree_index(); ++i) s = sqmod(s, p);
    return s;
}

}  // namespace ugq
