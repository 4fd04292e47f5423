#include "ugq/orbit.hpp"

namespace ugq {

const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::Type1: return "Type1";
        case OrbitClass::Type2: return "Type2";
        case OrbitClass::Type3: return "Type3";
        case OrbitClass::NotMinimal: return "NotMinimal";
    }
    return "?";
}

ParamPair apply_shift(const ParamPair& pair, const Poly& f) {
    return {pair.g, pair.h + pair.g * f + f.square()};
}

OrbitClass classify_type(const ParamPair& pair) {
    const Degree dg = pair.g.degree(), dh = pair.h.degree();
    if (dg.twice() < dh && dh.odd()) return OrbitClass::Type1;
    if (dg.twice() == dh) return OrbitClass::Type2;
    if (dg > dh) return OrbitClass::Type3;
    return OrbitClass::NotMinimal;
}

MinimalRep minimal_representative(const ParamPair& pair) {
    ParamPair cur = pair;
    Poly shift;
    OrbitClass type;
    while ((type = classify_type(cur)) == OrbitClass::NotMinimal) {
        // Not minimal forces deg h >= deg g and deg h >= 0; each step strips
        // the top monomial of h.
        const int dh = cur.h.degree().value();
        const Degree dg = cur.g.degree();
        const std::size_t d = (dg.twice() < cur.h.degree()) ? std::size_t(dh) / 2
                                                            : std::size_t(dh - dg.value());
        const Poly f = Poly::monomial(d);
        cur = apply_shift(cur, f);
        shift += f;
    }
    return {cur, type, shift};
}

ArtinSchreier solve_artin_schreier(const Poly& h) {
    const MinimalRep rep = minimal_representative({Poly::one(), h});
    ArtinSchreier out;
    if (rep.pair.h.is_zero()) {
        out.kind = ArtinSchreier::Kind::Zero;
        out.f = rep.shift;
    } else if (rep.pair.h.is_one()) {
        out.kind = ArtinSchreier::Kind::One;
        out.f = rep.shift;
    }
    return out;
}

}  // namespace ugq
