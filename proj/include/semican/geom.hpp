#pragma once

// Local geometry at points of the nilpotent variety: the pairing form and
// Hessian of (g, g') -> <g x, g' y>, tangent spaces of conormal bundles, and a
// numerical probe of w-regularity of the rank stratification.

#include "semican/core.hpp"
#include "semican/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace semican::geom {

using core::DimVector;
using core::Orbit;

/// x: V_1 -> V_2 (d2 x d1), y: V_2 -> V_1 (d1 x d2).
struct PairPoint {
    RatMatrix x;
    RatMatrix y;

    DimVector dim() const { return {static_cast<int>(x.cols()), static_cast<int>(x.rows())}; }
    /// Shapes agree and x y = 0 = y x.
    bool valid() const;
};

PairPoint from_class(const core::PiModClass& c);

/// Size of gl(d1) + gl(d2). Basis order: E_ab of gl(d1) row-major, then gl(d2).
std::size_t lie_dim(DimVector dim);

/// B(k, l) = tr([e_k, x] [e_l, y]).
RatMatrix bilinear_form_B(const PairPoint& p);

/// Full Hessian at 0 of F(h, h') = <exp(h) x, exp(h') y>, in blocks [[H_x, B], [B^T, H_y]].
RatMatrix hessian(const PairPoint& p);

struct HessianCheck {
    std::size_t rank_B = 0;
    std::size_t rank_H = 0;
    int expected = 0;           // dim of the orbit of x + dim of the orbit of y - d1 d2
    std::size_t tangent_dim = 0;
    bool generic = false;       // tangent_dim == d1 d2

    bool ok() const {
        return generic && rank_H == static_cast<std::size_t>(expected) && rank_B == rank_H;
    }
};

HessianCheck hessian_check(const PairPoint& p);
bool hessian_rank_check(const PairPoint& p);

/// Basis of {(u, v) : y u + v x = 0, u y + x v = 0}, the tangent space to the
/// conormal bundle; vectors list u (d2 x d1) then v (d1 x d2), row-major.
std::vector<RatVector> conormal_tangent(const PairPoint& p);

struct WRegOptions {
    int n_samples = 4;
    std::uint64_t seed = 1;
    int halvings = 6;
    double base_distance = 0.1;
    double threshold = 10.0;  // allowed growth of the ratio over the ladder
    double tiny = 1e-9;       // ratios below this count as zero
};

struct WRegReport {
    Orbit inner;
    Orbit outer;
    std::uint64_t seed = 0;
    std::vector<double> distances;   // perturbation scale e per rung
    std::vector<double> max_ratio;   // per rung, over the samples
    int resampled = 0;
    bool pass = false;
};

/// Compares tangent spaces at random points x' = a b of `inner` and nearby points
/// x'' = (a + e p)(b + e q) + e c of `outer`, with e on a halving ladder.
/// Ratios are taken against the measured |x'' - x'|. Requires inner.r < outer.r.
WRegReport w_regularity_sample(const Orbit& inner, const Orbit& outer, const WRegOptions& opts = {});

}  // namespace semican::geom
