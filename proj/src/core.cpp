#include "semican/core.hpp"

namespace semican::core {

PiModClass ConormalComponent::generic_class() const {
    return PiModClass{orbit.dim, orbit.r, orbit.dim.min() - orbit.r};
}

void validate(const DimVector& dim) {
    if (dim.d1 < 0 || dim.d2 < 0) throw CoreError("dimension vector entries must be nonnegative");
}

void validate(const Orbit& o) {
    validate(o.dim);
    if (o.r < 0 || o.r > o.dim.min())
        throw CoreError("orbit rank " + std::to_string(o.r) + " outside 0.." + std::to_string(o.dim.min()));
}

void validate(const PiModClass& c) {
    validate(c.dim);
    if (c.r < 0 || c.s < 0 || c.r + c.s > c.dim.min())
        throw CoreError("invalid class: need r, s >= 0 and r + s <= " + std::to_string(c.dim.min()));
}

std::vector<Orbit> enumerate_orbits(DimVector dim) {
    validate(dim);
    std::vector<Orbit> out;
    for (int r = 0; r <= dim.min(); ++r) out.push_back(Orbit{dim, r});
    return out;
}

std::vector<PiModClass> enumerate_pi_classes(DimVector dim) {
    validate(dim);
    std::vector<PiModClass> out;
    for (int r = 0; r <= dim.min(); ++r)
        for (int s = 0; r + s <= dim.min(); ++s) out.push_back(PiModClass{dim, r, s});
    return out;
}

int orbit_dim(const Orbit& o) {
    validate(o);
    return o.r * (o.dim.total() - o.r);
}

Orbit dual_orbit(const Orbit& o) {
    validate(o);
    // Lives in Hom(V_2, V_1); the swapped dimension vector keeps the rank formula symmetric.
    return Orbit{DimVector{o.dim.d2, o.dim.d1}, o.dim.min() - o.r};
}

int sign_parity(const Orbit& o) {
    return o.dim.lambda_dim() - orbit_dim(dual_orbit(o)) - orbit_dim(o);
}

RatMatrix representative_x(const Orbit& o) {
    validate(o);
    RatMatrix x(o.dim.d2, o.dim.d1);
    for (int k = 0; k < o.r; ++k) x(k, k) = 1;
    return x;
}

PairMatrices representative_pair(const PiModClass& c) {
    validate(c);
    PairMatrices p{representative_x(Orbit{c.dim, c.r}), RatMatrix(c.dim.d1, c.dim.d2)};
    for (int k = 0; k < c.s; ++k) p.y(c.dim.d1 - c.s + k, c.dim.d2 - c.s + k) = 1;
    return p;
}

std::string to_string(const DimVector& d) {
    return "(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")";
}

}  // namespace semican::core
