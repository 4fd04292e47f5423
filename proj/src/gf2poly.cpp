#include "ugq/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace ugq {

namespace {

constexpr std::size_t kKaratsubaWords = 12;

// dst ^= src << offset, dst sized large enough
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t offset) {
    const std::size_t wo = offset / 64, bo = offset % 64;
    if (bo == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[wo + i] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[wo + i] ^= (src[i] << bo) | carry;
        carry = src[i] >> (64 - bo);
    }
    if (carry) dst[wo + src.size()] ^= carry;
}

void mul_schoolbook(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                    std::vector<std::uint64_t>& out) {
    // shift-XOR over the set bits of the shorter operand
    if (a.size() > b.size()) std::swap(a, b);
    for (std::size_t wi = 0; wi < a.size(); ++wi) {
        std::uint64_t w = a[wi];
        while (w) {
            const int j = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(out, b, 64 * wi + static_cast<std::size_t>(j));
        }
    }
}

void mul_rec(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
             std::vector<std::uint64_t>& out) {
    if (a.empty() || b.empty()) return;
    if (std::min(a.size(), b.size()) <= kKaratsubaWords) {
        mul_schoolbook(a, b, out);
        return;
    }
    const std::size_t half = std::max(a.size(), b.size()) / 2;
    auto lo = [&](std::span<const std::uint64_t> s) { return s.subspan(0, std::min(half, s.size())); };
    auto hi = [&](std::span<const std::uint64_t> s) {
        return s.size() > half ? s.subspan(half) : std::span<const std::uint64_t>();
    };
    const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);

    std::vector<std::uint64_t> z0(a0.size() + b0.size(), 0);
    mul_rec(a0, b0, z0);
    std::vector<std::uint64_t> z2(a1.size() + b1.size(), 0);
    mul_rec(a1, b1, z2);

    auto sum = [](std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
        std::vector<std::uint64_t> r(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) r[i] ^= x[i];
        for (std::size_t i = 0; i < y.size(); ++i) r[i] ^= y[i];
        return r;
    };
    const auto as = sum(a0, a1), bs = sum(b0, b1);
    std::vector<std::uint64_t> z1(as.size() + bs.size(), 0);
    mul_rec(as, bs, z1);
    // z1 is at least as long as z0 and z2
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] ^= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] ^= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] ^= z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[half + i] ^= z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * half + i] ^= z2[i];
}

std::uint64_t compress_even_bits(std::uint64_t x) {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x >> 4)) & 0x00ff00ff00ff00ffull;
    x = (x | (x >> 8)) & 0x0000ffff0000ffffull;
    x = (x | (x >> 16)) & 0x00000000ffffffffull;
    return x;
}

std::uint64_t spread_bits(std::uint64_t x) {
    // inverse of compress_even_bits on 32-bit inputs
    x &= 0x00000000ffffffffull;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

}  // namespace

std::size_t Poly::degree_index() const {
    if (w_.empty()) throw std::logic_error("Poly: degree_index() of zero");
    return 64 * (w_.size() - 1) + (63 - static_cast<std::size_t>(std::countl_zero(w_.back())));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.w_.assign(a.w_.size() + b.w_.size(), 0);
    mul_rec(a.w_, b.w_, r.w_);
    r.trim();
    return r;
}

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly Poly::shifted_left(std::size_t k) const {
    if (is_zero()) return Poly();
    Poly r;
    r.w_.assign(w_.size() + k / 64 + 1, 0);
    xor_shifted(r.w_, w_, k);
    r.trim();
    return r;
}

Poly Poly::square() const {
    Poly r;
    r.w_.reserve(2 * w_.size());
    for (std::uint64_t w : w_) {
        r.w_.push_back(spread_bits(w & 0xffffffffull));
        r.w_.push_back(spread_bits(w >> 32));
    }
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.w_.size() != b.w_.size())
        return a.w_.size() < b.w_.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = a.w_.size(); i-- > 0;) {
        if (a.w_[i] != b.w_[i])
            return a.w_[i] < b.w_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

DivRem divrem(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    DivRem out;
    if (p.is_zero() || p.degree() < q.degree()) {
        out.rem = p;
        return out;
    }
    const std::size_t dq = q.degree_index();
    std::vector<std::uint64_t> rem(p.words().begin(), p.words().end());
    const std::size_t dp = p.degree_index();
    std::vector<std::uint64_t> quot(dp / 64 + 1, 0);
    // index of the current top bit of rem, scanned downward
    std::size_t top = dp;
    while (true) {
        // locate highest set bit <= top
        std::size_t wi = top / 64;
        std::uint64_t w = rem[wi] & (top % 64 == 63 ? ~0ull : ((std::uint64_t(1) << (top % 64 + 1)) - 1));
        while (w == 0) {
            if (wi == 0) { top = SIZE_MAX; break; }
            --wi;
            w = rem[wi];
        }
        if (top == SIZE_MAX) break;
        top = 64 * wi + (63 - static_cast<std::size_t>(std::countl_zero(w)));
        if (top < dq) break;
        const std::size_t s = top - dq;
        xor_shifted(rem, q.words(), s);
        quot[s / 64] ^= std::uint64_t(1) << (s % 64);
        if (top == 0) break;
        --top;
    }
    out.quot = Poly::from_words(std::move(quot));
    out.rem = Poly::from_words(std::move(rem));
    return out;
}

bool divides(const Poly& q, const Poly& p) { return divrem(p, q).rem.is_zero(); }

Poly gcd(Poly p, Poly q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Poly r = divrem(p, q).rem;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

std::optional<Poly> sqrt_exact(const Poly& p) {
    for (std::uint64_t w : p.words())
        if (w & 0xaaaaaaaaaaaaaaaaull) return std::nullopt;
    const auto src = p.words();
    std::vector<std::uint64_t> out((src.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const std::uint64_t half = compress_even_bits(src[i]);
        out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return Poly::from_words(std::move(out));
}

Poly derivative(const Poly& p) {
    std::vector<std::uint64_t> out;
    const auto src = p.words();
    out.reserve(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::uint64_t w = (src[i] >> 1) & 0x5555555555555555ull;
        // bit 64i+63 is odd, so nothing carries in from the next word
        out.push_back(w);
    }
    return Poly::from_words(std::move(out));
}

Poly subst_x_plus1(const Poly& p) {
    if (p.is_zero()) return p;
    // c'_i = XOR of c_j over j ^ superset of i, computed as a subset-sum
    // butterfly one bit level at a time.
    std::vector<std::uint64_t> w(p.words().begin(), p.words().end());
    static constexpr std::uint64_t kMask[6] = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
    };
    const std::size_t n = p.degree_index();
    for (int lvl = 0; (std::size_t(1) << lvl) <= n; ++lvl) {
        if (lvl < 6) {
            const unsigned sh = 1u << lvl;
            for (auto& word : w) word ^= (word & kMask[lvl]) >> sh;
        } else {
            const std::size_t step = std::size_t(1) << (lvl - 6);
            for (std::size_t wi = 0; wi < w.size(); ++wi)
                if (wi & step) w[wi - step] ^= w[wi];
        }
    }
    return Poly::from_words(std::move(w));
}

Poly pow(const Poly& base, unsigned long long e) {
    Poly r = Poly::one();
    Poly b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b.square();
    }
    return r;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    [[noreturn]] void fail(const std::string& msg) { throw PolyParseError(msg, i); }

    Poly parse_hex() {
        i += 2;  // "0x"
        const std::size_t start = i;
        std::string digits;
        while (i < s.size()) {
            const char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (!std::isxdigit(static_cast<unsigned char>(c))) break;
            digits.push_back(c);
            ++i;
        }
        if (digits.empty()) fail("expected hex digits after 0x");
        if (!at_end()) fail("trailing characters after hex literal");
        std::vector<std::uint64_t> words((digits.size() + 15) / 16, 0);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            const char c = digits[digits.size() - 1 - k];
            const std::uint64_t v =
                std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : (std::tolower(c) - 'a' + 10);
            words[k / 16] |= v << (4 * (k % 16));
        }
        (void)start;
        return Poly::from_words(std::move(words));
    }

    // one of "x^K" (K >= 2), "x", "1"; returns the exponent
    unsigned parse_term() {
        skip_ws();
        if (i >= s.size()) fail("expected term");
        const char c = s[i];
        if (c == '1') {
            ++i;
            return 0;
        }
        if (c == 'x') {
            ++i;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail("expected decimal exponent after '^'");
                unsigned long v = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    v = v * 10 + static_cast<unsigned long>(s[i] - '0');
                    if (v > 1u << 24) fail("exponent too large");
                    ++i;
                }
                if (v < 2) fail("exponent must be >= 2 (write 'x' or '1')");
                return static_cast<unsigned>(v);
            }
            return 1;
        }
        fail("expected 'x', 'x^K', '1' or '0'");
    }

    Poly run() {
        skip_ws();
        if (i >= s.size()) fail("empty input");
        // hex literal?
        if (s[i] == '0') {
            const std::size_t save = i;
            ++i;
            skip_ws();
            if (i < s.size() && (s[i] == 'x' || s[i] == 'X') && save + 1 == i) return parse_hex();
            i = save + 1;
            if (!at_end()) fail("'0' must stand alone");
            return Poly::zero();
        }
        Poly p;
        while (true) {
            const unsigned e = parse_term();
            if (p.bit(e)) fail("duplicate term");
            p += Poly::monomial(e);
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] != '+') fail("expected '+' between terms");
            ++i;
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(std::string_view text) {
    Parser p{text};
    return p.run();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.degree_index() + 1; i-- > 0;) {
        if (!p.bit(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else {
            out += "x^";
            out += std::to_string(i);
        }
    }
    return out;
}

}  // namespace ugq
