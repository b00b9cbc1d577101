#include "semican/sympoly.hpp"

#include <stdexcept>

namespace semican::sympoly {

namespace {

const char* kind_name(VarKind k) {
    switch (k) {
        case VarKind::X: return "X";
        case VarKind::M: return "M";
        case VarKind::N: return "N";
        case VarKind::Mp: return "Mp";
        case VarKind::Xp: return "Xp";
    }
    return "?";
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first))
            out.push_back(*i++);
        else if (i == a.end() || j->first < i->first)
            out.push_back(*j++);
        else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

int degree_of(const Monomial& m, const std::set<VarId>& vars) {
    int deg = 0;
    for (const auto& [v, e] : m)
        if (vars.count(v)) deg += e;
    return deg;
}

}  // namespace

std::string VarId::to_string() const {
    return std::string(kind_name(kind)) + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += "*";
        out += v.to_string();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(VarId v) {
    MultiPoly p;
    p.terms_.emplace(Monomial{{v, 1}}, Rational(1));
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

int MultiPoly::degree_in(const std::set<VarId>& vars) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, degree_of(m, vars));
    return deg;
}

std::set<VarId> MultiPoly::variables() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
    *this = std::move(out);
    return *this;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += monomial_to_string(m);
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& values) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term(c);
        Monomial kept;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                kept.emplace_back(v, e);
                continue;
            }
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        MultiPoly rest(1);
        for (const auto& [v, e] : kept)
            for (int k = 0; k < e; ++k) rest *= MultiPoly::var(v);
        out += term * rest;
    }
    return out;
}

MultiPoly partial_derivative(const MultiPoly& p, VarId v) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].first != v) continue;
            Monomial reduced = m;
            const int e = reduced[k].second;
            if (e == 1)
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
            else
                reduced[k].second = e - 1;
            MultiPoly term(Rational(c * e));
            for (const auto& [w, f] : reduced)
                for (int i = 0; i < f; ++i) term *= MultiPoly::var(w);
            out += term;
        }
    }
    return out;
}

Rational evaluate(const MultiPoly& p, const std::map<VarId, Rational>& point) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) {
                term = 0;
                break;
            }
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::optional<std::pair<std::map<VarId, MultiPoly>, MultiPoly>> split_linear(const MultiPoly& p,
                                                                             const std::set<VarId>& vars) {
    std::map<VarId, MultiPoly> coeffs;
    MultiPoly rest;
    for (const auto& [m, c] : p.terms()) {
        const int deg = degree_of(m, vars);
        if (deg > 1) return std::nullopt;
        MultiPoly term(c);
        std::optional<VarId> hit;
        for (const auto& [v, e] : m) {
            if (vars.count(v)) {
                hit = v;
                continue;
            }
            for (int k = 0; k < e; ++k) term *= MultiPoly::var(v);
        }
        if (hit)
            coeffs[*hit] += term;
        else
            rest += term;
    }
    return std::pair{std::move(coeffs), std::move(rest)};
}

PolyMatrix generic_x(const flag::FlagShape& shape) {
    const auto dim = shape.dim();
    PolyMatrix x(static_cast<std::size_t>(dim.d2), static_cast<std::size_t>(dim.d1));
    for (auto [i, j] : shape.adm_x_positions())
        x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly::var(VarKind::X, i, j);
    return x;
}

PolyMatrix unipotent_lower(VarKind kind, int n) {
    PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = MultiPoly(1);
        for (int j = 1; j < i; ++j)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly::var(kind, i, j);
    }
    return m;
}

MultiPoly expand_trace(const flag::FlagShape& shape, const flag::NormalFormY& y0) {
    if (auto err = flag::check_normal_form(shape, y0); !err.empty())
        throw std::invalid_argument("expand_trace: " + err);
    const auto dim = shape.dim();
    PolyMatrix y(static_cast<std::size_t>(dim.d1), static_cast<std::size_t>(dim.d2));
    for (auto [i, j] : y0.entries) y(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly(1);
    const PolyMatrix prod =
        generic_x(shape) * unipotent_lower(VarKind::M, dim.d1) * y * unipotent_lower(VarKind::N, dim.d2);
    MultiPoly tr;
    for (std::size_t k = 0; k < prod.rows(); ++k) tr += prod(k, k);
    return tr;
}

BilinearDecomposition bilinear_decompose(const MultiPoly& p, const std::set<VarId>& w1, const std::set<VarId>& w2,
                                         const std::set<VarId>& vc) {
    for (const auto& v : w1)
        if (w2.count(v) || vc.count(v))
            throw std::invalid_argument("bilinear_decompose: " + v.to_string() + " is in two classes");
    for (const auto& v : w2)
        if (vc.count(v)) throw std::invalid_argument("bilinear_decompose: " + v.to_string() + " is in two classes");

    BilinearDecomposition out;
    out.rows.assign(w1.begin(), w1.end());
    out.cols.assign(w2.begin(), w2.end());
    out.B = PolyMatrix(out.rows.size(), out.cols.size());
    std::map<VarId, std::size_t> row_of, col_of;
    for (std::size_t k = 0; k < out.rows.size(); ++k) row_of[out.rows[k]] = k;
    for (std::size_t k = 0; k < out.cols.size(); ++k) col_of[out.cols[k]] = k;

    for (const auto& [m, c] : p.terms()) {
        std::optional<VarId> a, b;
        int deg1 = 0, deg2 = 0;
        MultiPoly coeff(c);
        bool unknown = false;
        for (const auto& [v, e] : m) {
            if (w1.count(v)) {
                deg1 += e;
                a = v;
            } else if (w2.count(v)) {
                deg2 += e;
                b = v;
            } else {
                if (!vc.count(v)) unknown = true;
                for (int k = 0; k < e; ++k) coeff *= MultiPoly::var(v);
            }
        }
        if (unknown || deg1 != 1 || deg2 != 1) {
            out.ok = false;
            out.witness = (c == 1 ? std::string() : c.get_str() + "*") + monomial_to_string(m);
            if (unknown) out.witness += " (variable outside the partition)";
            out.B = PolyMatrix();
            return out;
        }
        out.B(row_of.at(*a), col_of.at(*b)) += coeff;
    }
    out.ok = true;
    return out;
}

}  // namespace semican::sympoly
