#pragma once

// Sparse multivariate polynomials over Q in matrix-entry variables.

#include "semican/flag_shape.hpp"
#include "semican/matrix.hpp"
#include "semican/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semican::sympoly {

/// Mp and Xp are the substituted M' and X' coordinates.
enum class VarKind { X, M, N, Mp, Xp };

/// A matrix-entry variable; row and col are 1-based.
struct VarId {
    VarKind kind = VarKind::X;
    int row = 1;
    int col = 1;

    auto operator<=>(const VarId&) const = default;
    std::string to_string() const;
};

/// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<VarId, int>>;

std::string monomial_to_string(const Monomial& m);

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(long c);
    MultiPoly(const Rational& c);
    static MultiPoly var(VarId v);
    static MultiPoly var(VarKind kind, int row, int col) { return var(VarId{kind, row, col}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    /// Degree in the variables of `vars`, maximized over terms.
    int degree_in(const std::set<VarId>& vars) const;
    std::set<VarId> variables() const;
    /// Coefficient of `m` (zero if absent).
    Rational coefficient(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= MultiPoly(-1); }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Canonical text: terms in increasing monomial order, e.g. "X[1,2]*M[2,1] - 1/2*N[2,1]".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

/// Simultaneous substitution of variables by polynomials.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& values);

MultiPoly partial_derivative(const MultiPoly& p, VarId v);

/// Evaluates at a point; variables missing from `point` are taken as zero.
Rational evaluate(const MultiPoly& p, const std::map<VarId, Rational>& point);

/// Splits p = sum over W1 variables w of w * c_w + remainder, where c_w and
/// the remainder are free of W1 variables. Requires p to be linear in `vars`.
std::optional<std::pair<std::map<VarId, MultiPoly>, MultiPoly>> split_linear(const MultiPoly& p,
                                                                             const std::set<VarId>& vars);

using PolyMatrix = Matrix<MultiPoly>;

/// tr(x * g1^{-1} * y0 * g2) with x generic on the admissible shape,
/// g1^{-1} = 1 + (M strictly lower), g2 = 1 + (N strictly lower).
MultiPoly expand_trace(const flag::FlagShape& shape, const flag::NormalFormY& y0);

/// Generic x on the admissible positions of the shape (d2 x d1).
PolyMatrix generic_x(const flag::FlagShape& shape);

/// Lower unitriangular matrix with `kind` variables strictly below the diagonal.
PolyMatrix unipotent_lower(VarKind kind, int n);

struct BilinearDecomposition {
    bool ok = false;
    std::vector<VarId> rows;  // W1 variables in order
    std::vector<VarId> cols;  // W2 variables in order
    PolyMatrix B;             // coefficients in the Vc variables
    std::string witness;      // offending monomial on failure
};

/// Succeeds iff every monomial has degree exactly one in W1 and exactly one
/// in W2; B holds the coefficient polynomials. Throws std::invalid_argument if
/// the three sets overlap.
BilinearDecomposition bilinear_decompose(const MultiPoly& p, const std::set<VarId>& w1, const std::set<VarId>& w2,
                                         const std::set<VarId>& vc);

}  // namespace semican::sympoly
