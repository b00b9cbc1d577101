#pragma once

// A2 quiver combinatorics: V = V_1 (+) V_2 with the single arrow 1 -> 2.
// E = Hom(V_1, V_2) with orbits classified by rank; the opposite space
// Hom(V_2, V_1) and the nilpotent variety of pairs (x, y) with xy = 0 = yx.

#include "semican/matrix.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semican::core {

struct DimVector {
    int d1 = 0;
    int d2 = 0;

    int total() const { return d1 + d2; }
    int min() const { return d1 < d2 ? d1 : d2; }
    /// dim of the nilpotent variety, equal to dim Hom(V_1, V_2).
    int lambda_dim() const { return d1 * d2; }

    auto operator<=>(const DimVector&) const = default;
};

/// Rank-r orbit in Hom(V_1, V_2).
struct Orbit {
    DimVector dim;
    int r = 0;

    auto operator<=>(const Orbit&) const = default;
};

/// Isomorphism class of a nilpotent pair: rank x = r, rank y = s.
struct PiModClass {
    DimVector dim;
    int r = 0;
    int s = 0;

    auto operator<=>(const PiModClass&) const = default;
};

/// Irreducible component of the nilpotent variety: closure of the conormal bundle to `orbit`.
struct ConormalComponent {
    Orbit orbit;

    int dimension() const { return orbit.dim.lambda_dim(); }
    PiModClass generic_class() const;
};

struct CoreError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void validate(const DimVector& dim);
void validate(const Orbit& o);
void validate(const PiModClass& c);

/// Orbits r = 0..min(d1, d2), which is also the closure order.
std::vector<Orbit> enumerate_orbits(DimVector dim);

/// All classes (r, s) with r + s <= min(d1, d2), ordered by (r, s).
std::vector<PiModClass> enumerate_pi_classes(DimVector dim);

int orbit_dim(const Orbit& o);

/// The rank s = min(d1, d2) - r orbit in Hom(V_2, V_1) sharing the conormal closure.
Orbit dual_orbit(const Orbit& o);

/// dim Lambda - dim(dual) - dim(orbit); always even.
int sign_parity(const Orbit& o);

/// r' <= r as orbits: orbit r' lies in the closure of orbit r.
inline bool in_closure(const Orbit& inner, const Orbit& outer) { return inner.r <= outer.r; }

struct PairMatrices {
    RatMatrix x;  // d2 x d1
    RatMatrix y;  // d1 x d2
};

/// Block normal form: x has I_r in the top-left, y has I_s in the bottom-right.
PairMatrices representative_pair(const PiModClass& c);

/// Same normal form for x alone.
RatMatrix representative_x(const Orbit& o);

std::string to_string(const DimVector& d);

}  // namespace semican::core
