#ifndef UGQ_GF2POLY_HPP
#define UGQ_GF2POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ugq {

/// Degree of a polynomial over F2, with deg(0) = -infinity.
///
/// The -infinity value participates in comparisons and absorbs addition,
/// so degree bookkeeping never needs a separate "is zero" flag.
class Degree {
  public:
    constexpr Degree() : v_(kNegInf) {}
    constexpr explicit Degree(int v) : v_(v) {}
    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const { return v_ == kNegInf; }
    constexpr bool finite() const { return v_ != kNegInf; }
    int value() const {
        if (is_neg_inf()) throw std::logic_error("Degree: value() on -inf");
        return v_;
    }

    friend constexpr bool operator==(Degree a, Degree b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(Degree a, Degree b) { return a.v_ <=> b.v_; }

    // absorbing: -inf + d = -inf
    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(a.v_ + b.v_);
    }
    friend constexpr Degree operator+(Degree a, int b) {
        return a.is_neg_inf() ? neg_inf() : Degree(a.v_ + b);
    }
    constexpr Degree twice() const { return is_neg_inf() ? neg_inf() : Degree(2 * v_); }
    constexpr bool odd() const { return finite() && (v_ & 1); }

    std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

  private:
    static constexpr int kNegInf = INT32_MIN;
    int v_;
};

/// Univariate polynomial over F2, bit-packed little-endian: bit i of the
/// word sequence is the coefficient of x^i.
///
/// Canonical form: no trailing zero words; the zero polynomial is the empty
/// word sequence. Nonzero polynomials are automatically monic. Values are
/// immutable in spirit: all named operations are pure; operator+= exists for
/// tight loops and mutates only the local value.
class Poly {
  public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return from_value(1); }
    static Poly x() { return from_value(2); }

    /// x^k
    static Poly monomial(std::size_t k) {
        Poly p;
        p.w_.assign(k / 64 + 1, 0);
        p.w_.back() = std::uint64_t(1) << (k % 64);
        return p;
    }

    /// Polynomial with the given (distinct) exponents set.
    static Poly from_bits(std::initializer_list<unsigned> exps) {
        Poly p;
        for (unsigned e : exps) {
            if (e / 64 >= p.w_.size()) p.w_.resize(e / 64 + 1, 0);
            p.w_[e / 64] ^= std::uint64_t(1) << (e % 64);
        }
        p.trim();
        return p;
    }

    /// Bits of v as coefficients (bit i = coefficient of x^i).
    static Poly from_value(std::uint64_t v) {
        Poly p;
        if (v) p.w_.push_back(v);
        return p;
    }

    static Poly from_words(std::vector<std::uint64_t> words) {
        Poly p;
        p.w_ = std::move(words);
        p.trim();
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    Degree degree() const {
        if (w_.empty()) return Degree::neg_inf();
        return Degree(static_cast<int>(degree_index()));
    }
    /// Degree as an index; requires a nonzero polynomial.
    std::size_t degree_index() const;

    bool bit(std::size_t i) const {
        return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1);
    }

    std::span<const std::uint64_t> words() const { return w_; }
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }
    /// Value as an integer; requires degree < 64.
    std::uint64_t value() const {
        if (w_.size() > 1) throw std::logic_error("Poly: value() needs degree < 64");
        return low_word();
    }

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b);

    /// p * x^k
    Poly shifted_left(std::size_t k) const;
    Poly square() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.w_ == b.w_; }
    /// Total order: compare as integers (equivalently by degree, then by
    /// bit encoding). Used for all deterministic orderings.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  private:
    std::vector<std::uint64_t> w_;
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }
};

Poly mul(const Poly& p, const Poly& q);

struct DivRem {
    Poly quot;
    Poly rem;
};
/// Euclidean division: p = q*quot + rem with deg(rem) < deg(q). q must be nonzero.
DivRem divrem(const Poly& p, const Poly& q);

/// Monic greatest common divisor; gcd(p, 0) = p. Rejects gcd(0, 0).
Poly gcd(Poly p, Poly q);

/// Exact square root: returns f with f^2 = p when p lies in F2[x^2]
/// (every set exponent even), nothing otherwise.
std::optional<Poly> sqrt_exact(const Poly& p);

/// Formal derivative (keeps odd-exponent terms, shifted down).
Poly derivative(const Poly& p);

/// Substitution x -> x+1; a ring involution.
Poly subst_x_plus1(const Poly& p);

Poly pow(const Poly& base, unsigned long long e);

/// True iff q divides p exactly.
bool divides(const Poly& q, const Poly& p);

class PolyParseError : public std::runtime_error {
  public:
    PolyParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Parse "x^K | x | 1" terms joined by '+', or a hex literal "0x...".
/// Whitespace is ignored; duplicate terms are rejected; "0" stands alone.
Poly parse_poly(std::string_view text);

/// Canonical text form, descending exponents ("x^5+x^2+1", "x", "1", "0").
std::string format_poly(const Poly& p);

}  // namespace ugq

#endif
