#include "semican/separation.hpp"

#include <algorithm>
#include <map>

namespace semican::separation {

using sympoly::VarKind;

namespace {

MultiPoly var(VarKind k, int r, int c) { return MultiPoly::var(k, r, c); }

// Entries of the unipotent factors strictly below the diagonal; zero elsewhere.
MultiPoly m_below(int a, int b) { return a > b ? var(VarKind::M, a, b) : MultiPoly(); }
MultiPoly n_below(int a, int b) { return a > b ? var(VarKind::N, a, b) : MultiPoly(); }

MultiPoly x_at(const FlagShape& shape, int i, int j) {
    return shape.adm_x(i, j) ? var(VarKind::X, i, j) : MultiPoly();
}

// Deterministic nonzero sample values for the coefficient variables.
std::map<VarId, Rational> sample_point(const std::set<VarId>& vars) {
    std::map<VarId, Rational> out;
    long k = 0;
    for (const auto& v : vars) {
        out[v] = Rational((k * 7 + 3) % 11 - 5 == 0 ? 6 : (k * 7 + 3) % 11 - 5);
        ++k;
    }
    return out;
}

}  // namespace

CriticalCheck critical_locus(const FlagShape& shape, const RatMatrix& x0, const RatMatrix& y) {
    const auto dim = shape.dim();
    for (std::size_t i = 0; i < x0.rows(); ++i)
        for (std::size_t j = 0; j < x0.cols(); ++j)
            if (x0(i, j) != 0 && !shape.adm_x(static_cast<int>(i) + 1, static_cast<int>(j) + 1))
                throw std::invalid_argument("critical_locus: x0 is not in the admissible shape");

    CriticalCheck out;
    // h(1, x0 + v) = tr((x0 + v) y); differentiate along each admissible v
    MultiPoly h;
    for (int i = 1; i <= dim.d2; ++i)
        for (int j = 1; j <= dim.d1; ++j) {
            const Rational& yji = y(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
            h += (MultiPoly(x0(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) + x_at(shape, i, j)) *
                 MultiPoly(yji);
        }
    out.e_part_zero = true;
    for (auto [i, j] : shape.adm_x_positions())
        if (evaluate(partial_derivative(h, VarId{VarKind::X, i, j}), {}) != 0) out.e_part_zero = false;

    // along u = (u1, u2): tr(u2 x0 y) - tr(u1 y x0)
    const RatMatrix xy = x0 * y, yx = y * x0;
    out.group_part_zero = xy.is_zero() && yx.is_zero();
    out.commutes = out.group_part_zero;

    // y(W^k) inside W^k for the coordinate flag W^k = span of slots <= k
    out.stabilizes = true;
    const int d = dim.total();
    for (int k = 1; k <= d; ++k)
        for (int j = 1; j <= dim.d2; ++j) {
            if (shape.s[static_cast<std::size_t>(j - 1)] > k) continue;
            for (int i = 1; i <= dim.d1; ++i)
                if (y(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) != 0 &&
                    shape.t[static_cast<std::size_t>(i - 1)] > k)
                    out.stabilizes = false;
        }
    return out;
}

bool critical_locus_check(const FlagShape& shape, const RatMatrix& x0, const RatMatrix& y) {
    return critical_locus(shape, x0, y).consistent();
}

RatMatrix compatible_x0(const FlagShape& shape, const NormalFormY& y0) {
    const auto dim = shape.dim();
    std::set<int> I, J;
    for (auto [i, j] : y0.entries) {
        I.insert(i);
        J.insert(j);
    }
    RatMatrix x0(static_cast<std::size_t>(dim.d2), static_cast<std::size_t>(dim.d1));
    for (auto [i, j] : shape.adm_x_positions())
        if (!J.count(i) && !I.count(j))
            x0(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = (i + 2 * j) % 5 + 1;
    return x0;
}

SeparationReport build_and_separate(const FlagShape& shape, const NormalFormY& y0) {
    if (auto err = flag::check_normal_form(shape, y0); !err.empty())
        throw std::invalid_argument("build_and_separate: " + err);
    const auto dim = shape.dim();

    SeparationReport rep;
    rep.shape = shape;
    rep.y0 = y0;
    rep.entries.assign(y0.entries.begin(), y0.entries.end());
    for (auto [i, j] : rep.entries) {
        rep.rows_I.insert(i);
        rep.cols_J.insert(j);
    }
    const auto& A = rep.entries;
    const auto& I = rep.rows_I;
    const auto& J = rep.cols_J;
    const int n_alpha = static_cast<int>(A.size());
    auto ia = [&](int a) { return A[static_cast<std::size_t>(a)].first; };
    auto ja = [&](int a) { return A[static_cast<std::size_t>(a)].second; };

    rep.h = sympoly::expand_trace(shape, y0);

    // T: pairs whose X entry X[j_a', i_a] is admissible
    std::set<std::pair<int, int>> T;
    for (int ap = 0; ap < n_alpha; ++ap)
        for (int a = 0; a < n_alpha; ++a)
            if (shape.adm_x(ja(ap), ia(a))) {
                if (!(ia(a) > ia(ap) && ja(a) > ja(ap)))
                    throw std::logic_error("admissible X[j_a', i_a] without i_a > i_a' and j_a > j_a'");
                T.insert({ap, a});
                rep.set_T.emplace_back(ap + 1, a + 1);
            }

    // Formal inversion of M' along decreasing j_a' within each fiber over alpha.
    std::map<std::pair<int, int>, MultiPoly> m_solved;
    std::map<VarId, MultiPoly> m_to_new;
    for (int a = 0; a < n_alpha; ++a) {
        std::vector<int> fiber;
        for (int ap = 0; ap < n_alpha; ++ap)
            if (T.count({ap, a})) fiber.push_back(ap);
        std::sort(fiber.begin(), fiber.end(), [&](int p, int q) { return ja(p) > ja(q); });
        for (int ap : fiber) {
            MultiPoly forward = m_below(ia(a), ia(ap)) + n_below(ja(a), ja(ap));
            MultiPoly solved = var(VarKind::Mp, ia(a), ia(ap)) - n_below(ja(a), ja(ap));
            for (int app = 0; app < n_alpha; ++app) {
                if (!(ia(app) < ia(a) && ja(app) > ja(ap))) continue;
                forward += m_below(ia(a), ia(app)) * n_below(ja(app), ja(ap));
                const MultiPoly m_entry = T.count({app, a}) ? m_solved.at({app, a}) : m_below(ia(a), ia(app));
                solved -= m_entry * n_below(ja(app), ja(ap));
            }
            m_solved[{ap, a}] = solved;
            const VarId m_var{VarKind::M, ia(a), ia(ap)};
            m_to_new[m_var] = solved;
            rep.m_prime.push_back({VarId{VarKind::Mp, ia(a), ia(ap)}, forward});
            rep.m_inverse.push_back({m_var, solved});
        }
    }

    std::set<VarId> mp_vars;
    for (auto [ap, a] : T) mp_vars.insert(VarId{VarKind::Mp, ia(a), ia(ap)});

    const MultiPoly h1 = substitute(rep.h, m_to_new);
    const auto split = sympoly::split_linear(h1, mp_vars);
    if (!split) throw SeparationError("trace is not linear in M' after inversion");
    const auto& m_coeff = split->first;

    // U coefficients: the M'-part and the M'-free part of each solved M entry
    std::map<std::pair<int, int>, std::pair<std::map<VarId, MultiPoly>, MultiPoly>> u_parts;
    for (const auto& [key, solved] : m_solved) {
        auto parts = sympoly::split_linear(solved, mp_vars);
        if (!parts) throw SeparationError("inverted M entry is not linear in M'");
        u_parts[key] = std::move(*parts);
    }

    // X' in the original variables, and X in terms of X'
    std::map<VarId, MultiPoly> x_to_new;
    rep.x_prime_is_coefficient = true;
    for (auto [ap, a] : T) {
        const VarId x_var{VarKind::X, ja(ap), ia(a)};
        const VarId mp_var{VarKind::Mp, ia(a), ia(ap)};
        MultiPoly correction;
        for (int app = 0; app < n_alpha; ++app) {
            if (!T.count({app, a}) || ja(app) > ja(ap)) continue;
            const auto& coeffs = u_parts.at({app, a}).first;
            auto it = coeffs.find(mp_var);
            if (it == coeffs.end()) continue;
            for (int i = 1; i <= dim.d2; ++i) {
                if (J.count(i)) continue;
                correction += x_at(shape, i, ia(a)) * it->second * n_below(ja(app), i);
            }
        }
        const MultiPoly forward = var(VarKind::X, ja(ap), ia(a)) + correction;
        rep.x_prime.push_back({VarId{VarKind::Xp, ja(ap), ia(a)}, forward});
        x_to_new[x_var] = var(VarKind::Xp, ja(ap), ia(a)) - correction;
        auto c = m_coeff.find(mp_var);
        const MultiPoly coefficient = c == m_coeff.end() ? MultiPoly() : c->second;
        if (coefficient != forward) rep.x_prime_is_coefficient = false;
    }

    rep.separated = substitute(h1, x_to_new);

    // Variable classes
    for (auto [ap, a] : T) {
        rep.w1.insert(VarId{VarKind::Mp, ia(a), ia(ap)});
        rep.w2.insert(VarId{VarKind::Xp, ja(ap), ia(a)});
    }
    for (int r = 1; r <= dim.d1; ++r)
        for (int c = 1; c < r; ++c) {
            const VarId v{VarKind::M, r, c};
            if (m_to_new.count(v)) continue;
            (!I.count(r) && I.count(c) ? rep.w1 : rep.vc).insert(v);
        }
    for (int r = 1; r <= dim.d2; ++r)
        for (int c = 1; c < r; ++c) (J.count(r) && !J.count(c) ? rep.w2 : rep.vc).insert(VarId{VarKind::N, r, c});
    for (auto [i, j] : shape.adm_x_positions()) {
        const VarId v{VarKind::X, i, j};
        if (x_to_new.count(v)) continue;
        if (!J.count(i) && I.count(j))
            rep.w1.insert(v);
        else if (J.count(i) && !I.count(j))
            rep.w2.insert(v);
        else
            rep.vc.insert(v);
    }

    rep.bilinear = sympoly::bilinear_decompose(rep.separated, rep.w1, rep.w2, rep.vc);
    if (!rep.bilinear.ok)
        throw SeparationError("composition " + shape.composition_string() + ", y0 {" + y0.to_string() +
                              "}: separated trace is not bilinear, witness " + rep.bilinear.witness);

    // Hessian in the quadratic variables at a sample coefficient point is
    // [[0, B], [B^T, 0]], of rank twice rank B.
    {
        const auto point = sample_point(rep.vc);
        RatMatrix b(rep.bilinear.B.rows(), rep.bilinear.B.cols());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = evaluate(rep.bilinear.B(r, c), point);
        rep.hessian_rank = 2 * rank(b);
    }
    // even rank gives chi of the nearby cycle 0, hence chi of the shifted vanishing cycle 1 - 0
    const int chi_psi = rep.hessian_rank % 2 == 0 ? 0 : 1;
    rep.chi_phi = 1 - chi_psi;

    // Six closed-form pieces in the new variables
    {
        MultiPoly six;
        for (auto [ap, a] : T) six += var(VarKind::Xp, ja(ap), ia(a)) * var(VarKind::Mp, ia(a), ia(ap));
        for (int a = 0; a < n_alpha; ++a)
            for (int i = 1; i <= dim.d2; ++i)
                if (!J.count(i)) six += x_at(shape, i, ia(a)) * n_below(ja(a), i);
        for (int ap = 0; ap < n_alpha; ++ap)
            for (int j = 1; j <= dim.d1; ++j)
                if (!I.count(j)) six += x_at(shape, ja(ap), j) * m_below(j, ia(ap));
        for (int app = 0; app < n_alpha; ++app)
            for (int i = 1; i <= dim.d2; ++i)
                for (int j = 1; j <= dim.d1; ++j) {
                    if (I.count(j)) continue;
                    six += x_at(shape, i, j) * m_below(j, ia(app)) * n_below(ja(app), i);
                }
        for (int i = 1; i <= dim.d2; ++i) {
            if (J.count(i)) continue;
            for (int ap = 0; ap < n_alpha; ++ap)
                for (int app = 0; app < n_alpha; ++app) {
                    const MultiPoly middle =
                        T.count({app, ap}) ? u_parts.at({app, ap}).second : m_below(ia(ap), ia(app));
                    six += x_at(shape, i, ia(ap)) * middle * n_below(ja(app), i);
                }
        }
        rep.six_term_ok = six == rep.separated;
    }

    // Expanding X' and M' back must give the original trace exactly
    {
        std::map<VarId, MultiPoly> forward;
        for (const auto& s : rep.m_prime) forward[s.var] = s.value;
        for (const auto& s : rep.x_prime) forward[s.var] = s.value;
        rep.back_substitution_ok = substitute(rep.separated, forward) == rep.h;
    }

    rep.critical = critical_locus(shape, compatible_x0(shape, y0), y0.to_matrix(dim));
    return rep;
}

}  // namespace semican::separation
