#ifndef UGQ_ORBIT_HPP
#define UGQ_ORBIT_HPP

#include <string>

#include "ugq/gf2poly.hpp"

namespace ugq {

/// Parameters (g, h) of the ring F2[x,y]/(y^2 + gy + h).
struct ParamPair {
    Poly g;
    Poly h;
    bool operator==(const ParamPair&) const = default;
};

enum class OrbitClass { Type1, Type2, Type3, NotMinimal };

const char* to_string(OrbitClass c);

/// The additive shift y -> y + f sends (g, h) to (g, h + gf + f^2).
ParamPair apply_shift(const ParamPair& pair, const Poly& f);

/// Trichotomy for minimal representatives:
///   Type1: 2 deg g < deg h, deg h odd
///   Type2: 2 deg g = deg h
///   Type3: deg g > deg h
/// NotMinimal when none holds (deg h can then be lowered by a shift).
OrbitClass classify_type(const ParamPair& pair);

/// A pair of minimal deg h in its shift orbit, with the shift that reaches
/// it from the input: h_in + g*shift + shift^2 = h.
struct MinimalRep {
    ParamPair pair;
    OrbitClass type;  // never NotMinimal
    Poly shift;
};

/// Greedy reduction: repeatedly strip the top monomial of h with f = x^d.
/// Terminates after at most 1 + deg h steps. For Type 3 the result is the
/// unique minimal representative of the orbit; for Types 1 and 2 it is the
/// canonical one this iteration produces.
MinimalRep minimal_representative(const ParamPair& pair);

/// Decides h = f^2 + f, h = f^2 + f + 1, or neither, by reducing (1, h).
struct ArtinSchreier {
    enum class Kind { Zero, One, NoSolution };
    Kind kind = Kind::NoSolution;
    Poly f;  // meaningful unless NoSolution
};
ArtinSchreier solve_artin_schreier(const Poly& h);

}  // namespace ugq

#endif
