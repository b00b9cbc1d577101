#pragma once

// Variable separation for the trace function tr(x g1^{-1} y0 g2) on the
// opposite unipotent groups times the flag-stabilizing x: a change of
// variables after which the function is bilinear in two classes of variables
// with polynomial coefficients in the rest.

#include "semican/flag_shape.hpp"
#include "semican/sympoly.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semican::separation {

using flag::FlagShape;
using flag::NormalFormY;
using sympoly::MultiPoly;
using sympoly::VarId;

struct SeparationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Substitution {
    VarId var;
    MultiPoly value;
};

struct CriticalCheck {
    bool e_part_zero = false;      // derivative along the flag-stabilizing directions
    bool group_part_zero = false;  // derivative along the group directions
    bool stabilizes = false;       // y maps every step of the flag into itself
    bool commutes = false;         // x0 y = 0 and y x0 = 0
    /// The differential vanishes exactly when y stabilizes the flag (given commutation).
    bool consistent() const { return (e_part_zero && group_part_zero) == (stabilizes && commutes); }
};

/// Differential of (g, x) -> <g x, y> at (1, x0). Entries of x0 outside the
/// admissible shape are rejected.
CriticalCheck critical_locus(const FlagShape& shape, const RatMatrix& x0, const RatMatrix& y);
bool critical_locus_check(const FlagShape& shape, const RatMatrix& x0, const RatMatrix& y);

struct SeparationReport {
    FlagShape shape;
    NormalFormY y0;
    std::vector<std::pair<int, int>> entries;   // the matching, alpha = 1..|A|
    std::set<int> rows_I;                        // rows of V_1 hit by y0
    std::set<int> cols_J;                        // columns of V_2 hit by y0
    std::vector<std::pair<int, int>> set_T;      // (alpha', alpha), 1-based
    MultiPoly h;                                 // the trace polynomial
    std::vector<Substitution> m_prime;           // M' in the original variables
    std::vector<Substitution> m_inverse;         // M in terms of M' (formal inversion)
    std::vector<Substitution> x_prime;           // X' in the original variables
    MultiPoly separated;                         // h in the new variables
    std::set<VarId> w1, w2, vc;
    sympoly::BilinearDecomposition bilinear;
    std::size_t hessian_rank = 0;                // rank at a sample coefficient point
    bool x_prime_is_coefficient = false;         // X' equals the coefficient of M' after inversion
    bool six_term_ok = false;                    // separated == sum of the six closed-form pieces
    bool back_substitution_ok = false;           // separated with X', M' expanded == h
    int chi_phi = 0;
    CriticalCheck critical;

    bool ok() const {
        return bilinear.ok && chi_phi == 1 && x_prime_is_coefficient && six_term_ok && back_substitution_ok &&
               critical.consistent() && hessian_rank % 2 == 0;
    }
};

/// Throws std::invalid_argument if y0 is not an admissible matching and
/// SeparationError if the separated function is not bilinear.
SeparationReport build_and_separate(const FlagShape& shape, const NormalFormY& y0);

/// A point x0 of the admissible shape with x0 y0 = 0 = y0 x0 and nonzero
/// entries wherever allowed.
RatMatrix compatible_x0(const FlagShape& shape, const NormalFormY& y0);

}  // namespace semican::separation
