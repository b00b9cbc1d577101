#include "semican/flag_shape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semican::flag {

std::vector<std::pair<int, int>> FlagShape::adm_x_positions() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i)
        for (int j = 1; j <= static_cast<int>(t.size()); ++j)
            if (adm_x(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> FlagShape::adm_y_positions() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= static_cast<int>(t.size()); ++i)
        for (int j = 1; j <= static_cast<int>(s.size()); ++j)
            if (adm_y(i, j)) out.emplace_back(i, j);
    return out;
}

std::string FlagShape::composition_string() const {
    std::string out;
    for (std::size_t k = 0; k < composition.size(); ++k) out += (k ? "," : "") + std::to_string(composition[k]);
    return out;
}

FlagShape flag_shape(const std::vector<int>& composition) {
    FlagShape shape{composition, {}, {}};
    for (std::size_t k = 0; k < composition.size(); ++k) {
        const int slot = static_cast<int>(k) + 1;
        if (composition[k] == 1)
            shape.t.push_back(slot);
        else if (composition[k] == 2)
            shape.s.push_back(slot);
        else
            throw std::invalid_argument("composition entries must be 1 or 2");
    }
    return shape;
}

std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "1" || item == "2")
            out.push_back(item[0] - '0');
        else
            throw std::invalid_argument("bad composition entry '" + item + "'");
    }
    return out;
}

RatMatrix NormalFormY::to_matrix(DimVector dim) const {
    RatMatrix m(static_cast<std::size_t>(dim.d1), static_cast<std::size_t>(dim.d2));
    for (auto [i, j] : entries) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return m;
}

std::string NormalFormY::to_string() const {
    std::string out;
    for (auto [i, j] : entries) out += (out.empty() ? "" : ",") + std::to_string(i) + ":" + std::to_string(j);
    return out;
}

std::string check_normal_form(const FlagShape& shape, const NormalFormY& y0) {
    const auto dim = shape.dim();
    std::set<int> rows, cols;
    for (auto [i, j] : y0.entries) {
        const std::string at = std::to_string(i) + ":" + std::to_string(j);
        if (i < 1 || i > dim.d1 || j < 1 || j > dim.d2) return "position " + at + " is out of range";
        if (!shape.adm_y(i, j))
            return "position " + at + " is not admissible for y (needs t_" + std::to_string(i) + " < s_" +
                   std::to_string(j) + ")";
        if (!rows.insert(i).second) return "row " + std::to_string(i) + " has two entries";
        if (!cols.insert(j).second) return "column " + std::to_string(j) + " has two entries";
    }
    return {};
}

BorelReduction normal_form(const FlagShape& shape, const RatMatrix& y_in) {
    const auto dim = shape.dim();
    const auto d1 = static_cast<std::size_t>(dim.d1), d2 = static_cast<std::size_t>(dim.d2);
    if (y_in.rows() != d1 || y_in.cols() != d2) throw std::invalid_argument("normal_form: y must be d1 x d2");
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            if (y_in(i, j) != 0 && !shape.adm_y(static_cast<int>(i) + 1, static_cast<int>(j) + 1))
                throw std::invalid_argument("normal_form: entry " + std::to_string(i + 1) + ":" +
                                            std::to_string(j + 1) + " is not admissible");

    RatMatrix y = y_in;
    RatMatrix left = RatMatrix::identity(d1);
    RatMatrix right = RatMatrix::identity(d2);
    NormalFormY normal;

    for (std::size_t c = 0; c < d2; ++c) {
        std::size_t p = d1;
        for (std::size_t i = d1; i-- > 0;)
            if (y(i, c) != 0) {
                p = i;
                break;
            }
        if (p == d1) continue;
        // rows above the pivot: row_i -= f * row_p, an upper triangular left factor
        for (std::size_t i = 0; i < p; ++i) {
            if (y(i, c) == 0) continue;
            const Rational f = y(i, c) / y(p, c);
            for (std::size_t j = 0; j < d2; ++j) y(i, j) -= f * y(p, j);
            for (std::size_t j = 0; j < d1; ++j) left(i, j) -= f * left(p, j);
        }
        // columns to the right: col_k -= f * col_c, an upper triangular right factor
        for (std::size_t k = c + 1; k < d2; ++k) {
            if (y(p, k) == 0) continue;
            const Rational f = y(p, k) / y(p, c);
            for (std::size_t i = 0; i < d1; ++i) y(i, k) -= f * y(i, c);
            for (std::size_t i = 0; i < d2; ++i) right(i, k) -= f * right(i, c);
        }
        const Rational scale = 1 / y(p, c);
        for (std::size_t j = 0; j < d2; ++j) y(p, j) *= scale;
        for (std::size_t j = 0; j < d1; ++j) left(p, j) *= scale;
        normal.entries.emplace(static_cast<int>(p) + 1, static_cast<int>(c) + 1);
    }
    return {normal, left, right};
}

std::vector<std::vector<int>> compositions(DimVector dim) {
    core::validate(dim);
    std::vector<int> base;
    base.insert(base.end(), static_cast<std::size_t>(dim.d1), 1);
    base.insert(base.end(), static_cast<std::size_t>(dim.d2), 2);
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<NormalFormY> admissible_matchings(const FlagShape& shape) {
    const auto dim = shape.dim();
    std::vector<NormalFormY> out;
    std::vector<bool> used_col(static_cast<std::size_t>(dim.d2) + 1, false);
    NormalFormY current;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > dim.d1) {
            out.push_back(current);
            return;
        }
        self(self, row + 1);
        for (int j = 1; j <= dim.d2; ++j) {
            if (used_col[static_cast<std::size_t>(j)] || !shape.adm_y(row, j)) continue;
            used_col[static_cast<std::size_t>(j)] = true;
            current.entries.emplace(row, j);
            self(self, row + 1);
            current.entries.erase({row, j});
            used_col[static_cast<std::size_t>(j)] = false;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const NormalFormY& a, const NormalFormY& b) { return a.entries < b.entries; });
    return out;
}

std::vector<Instance> enumerate_instances(DimVector dim) {
    std::vector<Instance> out;
    for (const auto& comp : compositions(dim)) {
        const auto shape = flag_shape(comp);
        for (auto& y0 : admissible_matchings(shape)) out.push_back({shape, std::move(y0)});
    }
    return out;
}

}  // namespace semican::flag
