#pragma once

// Coordinate flags attached to a composition in {1,2}^d, the admissible
// supports they cut out in both orientations, and the Borel normal form of y.

#include "semican/core.hpp"
#include "semican/matrix.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semican::flag {

using core::DimVector;

/// Slots are 1-based positions in the composition. Row/column indices of the
/// admissibility predicates are 1-based as well.
struct FlagShape {
    std::vector<int> composition;  // entries 1 or 2
    std::vector<int> t;            // slots of vertex-1 basis vectors
    std::vector<int> s;            // slots of vertex-2 basis vectors

    DimVector dim() const { return {static_cast<int>(t.size()), static_cast<int>(s.size())}; }
    /// x(i, j) may be nonzero: row i of V_2, column j of V_1.
    bool adm_x(int i, int j) const { return s.at(i - 1) < t.at(j - 1); }
    /// y(i, j) may be nonzero: row i of V_1, column j of V_2.
    bool adm_y(int i, int j) const { return t.at(i - 1) < s.at(j - 1); }

    std::vector<std::pair<int, int>> adm_x_positions() const;
    std::vector<std::pair<int, int>> adm_y_positions() const;
    std::string composition_string() const;
};

FlagShape flag_shape(const std::vector<int>& composition);

/// Parses "1,2,2,1".
std::vector<int> parse_composition(const std::string& text);

/// Positions (i, j) of a partial matching, 1-based, each of value 1.
struct NormalFormY {
    std::set<std::pair<int, int>> entries;

    friend bool operator==(const NormalFormY&, const NormalFormY&) = default;
    RatMatrix to_matrix(DimVector dim) const;
    std::string to_string() const;
};

/// Empty string if `y0` is a partial matching supported on admissible
/// positions, else a description of the problem.
std::string check_normal_form(const FlagShape& shape, const NormalFormY& y0);

/// normal = left * y * right with left (d1 x d1) and right (d2 x d2) invertible upper triangular.
struct BorelReduction {
    NormalFormY normal;
    RatMatrix left;
    RatMatrix right;
};

/// Column sweep: for each column, the bottom nonzero entry becomes the pivot;
/// row operations clear the column above it and column operations clear the
/// row to its right. Throws std::invalid_argument on inadmissible support.
BorelReduction normal_form(const FlagShape& shape, const RatMatrix& y);

/// All compositions of dim, in lexicographic order.
std::vector<std::vector<int>> compositions(DimVector dim);

/// All admissible partial matchings (including the empty one), sorted.
std::vector<NormalFormY> admissible_matchings(const FlagShape& shape);

struct Instance {
    FlagShape shape;
    NormalFormY y0;
};

/// Every composition paired with every admissible matching.
std::vector<Instance> enumerate_instances(DimVector dim);

}  // namespace semican::flag
