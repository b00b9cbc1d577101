#include "semican/bases.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

namespace semican::bases {

const Rational& ConstructibleFnLambda::at(int r, int s) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].r == r && classes[k].s == s) return values[k];
    throw std::out_of_range("no class (" + std::to_string(r) + "," + std::to_string(s) + ")");
}

namespace {

void compositions_rec(int left1, int left2, std::vector<int>& prefix, std::vector<MonomialWord>& out) {
    if (left1 == 0 && left2 == 0) {
        out.push_back(MonomialWord::from_vertices(prefix));
        return;
    }
    if (left1 > 0) {
        prefix.push_back(1);
        compositions_rec(left1 - 1, left2, prefix, out);
        prefix.pop_back();
    }
    if (left2 > 0) {
        prefix.push_back(2);
        compositions_rec(left1, left2 - 1, prefix, out);
        prefix.pop_back();
    }
}

// Runs body(i) for i in [0, n) across the available hardware threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
}

template <typename Class>
RatMatrix value_table(const std::vector<MonomialWord>& words, const std::vector<Class>& classes) {
    RatMatrix m(words.size(), classes.size());
    parallel_for(words.size(), [&](std::size_t w) {
        qcount::WordEvaluator<Class> eval(words[w]);
        for (std::size_t c = 0; c < classes.size(); ++c) m(w, c) = Rational(eval(classes[c]).at_one());
    });
    return m;
}

// The column space of the transposed E table must contain every orbit
// indicator; report the ones that are missing.
std::string missing_directions(const RatMatrix& e_side) {
    const RatMatrix a = e_side.transpose();
    std::string missing;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        RatVector e(a.rows(), Rational(0));
        e[r] = 1;
        if (!solve_pivoted(a, e)) missing += (missing.empty() ? "" : ", ") + std::string("r=") + std::to_string(r);
    }
    return missing;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

std::vector<MonomialWord> composition_words(DimVector dim) {
    core::validate(dim);
    std::vector<MonomialWord> out;
    std::vector<int> prefix;
    compositions_rec(dim.d1, dim.d2, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialWord> spanning_words(DimVector dim) {
    std::set<MonomialWord> words;
    for (auto& w : composition_words(dim)) words.insert(std::move(w));

    auto add_grouped = [&](int outer, int middle, int a, int b, int c) {
        MonomialWord w;
        if (a > 0) w.letters.push_back({outer, a});
        w.letters.push_back({middle, b});
        if (c > 0) w.letters.push_back({outer, c});
        words.insert(std::move(w));
    };
    // 1^a 2^b 1^c
    if (dim.d2 >= 1)
        for (int a = 0; a <= dim.d1; ++a) add_grouped(1, 2, a, dim.d2, dim.d1 - a);
    // 2^a 1^b 2^c
    if (dim.d1 >= 1)
        for (int a = 0; a <= dim.d2; ++a) add_grouped(2, 1, a, dim.d1, dim.d2 - a);
    return {words.begin(), words.end()};
}

RatMatrix monomial_matrix_E(DimVector dim, const std::vector<MonomialWord>& words) {
    return value_table(words, core::enumerate_orbits(dim));
}

RatMatrix monomial_matrix_Pi(DimVector dim, const std::vector<MonomialWord>& words) {
    return value_table(words, core::enumerate_pi_classes(dim));
}

MonomialTables MonomialTables::build(DimVector dim, std::vector<MonomialWord> words) {
    MonomialTables t{dim, std::move(words), {}, {}};
    t.e_side = monomial_matrix_E(dim, t.words);
    t.pi_side = monomial_matrix_Pi(dim, t.words);
    return t;
}

bool smallness_check(DimVector dim, int r, ResolutionSide side) {
    core::validate(Orbit{dim, r});
    // the kernel-side fiber over a rank-r' point is Gr(d1 - r, d1 - r');
    // the cokernel side swaps d1 and d2
    const int a = side == ResolutionSide::Kernel ? dim.d1 : dim.d2;
    const int total = dim.total();
    for (int rp = 0; rp < r; ++rp) {
        const int twice_fiber = 2 * (a - r) * (r - rp);
        const int codim = (r - rp) * (total - r - rp);
        if (!(twice_fiber < codim)) return false;
    }
    return true;
}

ConstructibleFnE canonical_fn(DimVector dim, int r) {
    core::validate(Orbit{dim, r});
    ResolutionSide side;
    if (dim.d1 <= dim.d2 && smallness_check(dim, r, ResolutionSide::Kernel))
        side = ResolutionSide::Kernel;
    else if (smallness_check(dim, r, ResolutionSide::Cokernel))
        side = ResolutionSide::Cokernel;
    else if (smallness_check(dim, r, ResolutionSide::Kernel))
        side = ResolutionSide::Kernel;
    else
        throw SmallnessError("no small resolution for the closure of orbit r=" + std::to_string(r) + " in " +
                             core::to_string(dim));

    const int a = side == ResolutionSide::Kernel ? dim.d1 : dim.d2;
    ConstructibleFnE f{dim, std::vector<Rational>(static_cast<std::size_t>(dim.min()) + 1, Rational(0))};
    for (int rp = 0; rp <= r; ++rp) f.values[static_cast<std::size_t>(rp)] = Rational(binomial(a - rp, a - r));
    return f;
}

RatVector express_in_monomials(const ConstructibleFnE& f, const MonomialTables& tables) {
    if (f.dim != tables.dim) throw std::invalid_argument("express_in_monomials: dimension mismatch");
    const RatMatrix a = tables.e_side.transpose();
    if (rank(a) < a.rows())
        throw RankDeficiencyError("monomial matrix for " + core::to_string(f.dim) +
                                  " misses orbit directions: " + missing_directions(tables.e_side));
    auto sol = solve_pivoted(a, f.values);
    if (!sol) throw RankDeficiencyError("function is not in the monomial span");
    return *sol;
}

RatVector express_in_monomials(const ConstructibleFnE& f, const std::vector<MonomialWord>& words) {
    return express_in_monomials(f, MonomialTables::build(f.dim, words));
}

ConstructibleFnLambda lift_coefficients(const RatVector& coeffs, const MonomialTables& tables) {
    ConstructibleFnLambda out{tables.dim, core::enumerate_pi_classes(tables.dim), {}};
    out.values = mat_vec(tables.pi_side.transpose(), coeffs);
    return out;
}

ConstructibleFnLambda psi_inverse(const ConstructibleFnE& f, const MonomialTables& tables) {
    return lift_coefficients(express_in_monomials(f, tables), tables);
}

ConstructibleFnLambda psi_inverse(const ConstructibleFnE& f, const std::vector<MonomialWord>& words) {
    return psi_inverse(f, MonomialTables::build(f.dim, words));
}

ConstructibleFnE restrict_to_E(const ConstructibleFnLambda& f) {
    ConstructibleFnE out{f.dim, std::vector<Rational>(static_cast<std::size_t>(f.dim.min()) + 1, Rational(0))};
    for (std::size_t k = 0; k < f.classes.size(); ++k)
        if (f.classes[k].s == 0) out.values[static_cast<std::size_t>(f.classes[k].r)] = f.values[k];
    return out;
}

ExpansionMatrix m_coefficients(const MonomialTables& tables) {
    const DimVector dim = tables.dim;
    const auto n = static_cast<std::size_t>(dim.min()) + 1;
    ExpansionMatrix m{dim, RatMatrix(n, n)};
    for (int r = 0; r <= dim.min(); ++r) {
        const auto lifted = psi_inverse(canonical_fn(dim, r), tables);
        for (int rp = 0; rp <= dim.min(); ++rp) {
            const auto generic = core::ConormalComponent{Orbit{dim, rp}}.generic_class();
            m.entries(static_cast<std::size_t>(rp), static_cast<std::size_t>(r)) = lifted.at(generic.r, generic.s);
        }
    }
    return m;
}

ExpansionMatrix m_coefficients(DimVector dim) { return m_coefficients(MonomialTables::build(dim)); }

std::string check_m_structure(const ExpansionMatrix& m) {
    const std::size_t n = m.entries.rows();
    for (std::size_t rp = 0; rp < n; ++rp)
        for (std::size_t r = 0; r < n; ++r) {
            const Rational& v = m.entries(rp, r);
            const std::string at = "(" + std::to_string(rp) + "," + std::to_string(r) + ")";
            if (rp == r && v != 1) return "diagonal entry " + at + " is " + to_pq_string(v);
            if (rp > r && v != 0) return "entry " + at + " outside the closure support is " + to_pq_string(v);
            if (!is_integer(v)) return "entry " + at + " is not integral: " + to_pq_string(v);
        }
    return {};
}

ExpansionMatrix cc_multiplicities(const ExpansionMatrix& m) {
    const DimVector dim = m.dim;
    const std::size_t n = m.entries.rows();
    ExpansionMatrix out{dim, RatMatrix(n, n)};
    for (std::size_t rp = 0; rp < n; ++rp)
        for (std::size_t r = 0; r < n; ++r) {
            const int exponent = core::orbit_dim(Orbit{dim, static_cast<int>(rp)}) -
                                 core::orbit_dim(Orbit{dim, static_cast<int>(r)});
            out.entries(rp, r) = (exponent % 2 == 0 ? 1 : -1) * m.entries(rp, r);
        }

    if (auto err = check_m_structure(out); !err.empty())
        throw ConjectureViolation("characteristic-cycle multiplicities for " + core::to_string(dim) + ": " + err);
    for (std::size_t rp = 0; rp < n; ++rp)
        for (std::size_t r = 0; r < n; ++r)
            if (out.entries(rp, r) < 0)
                throw ConjectureViolation("negative multiplicity n(" + std::to_string(rp) + "," + std::to_string(r) +
                                          ") = " + to_pq_string(out.entries(rp, r)) + " for " + core::to_string(dim));
    return out;
}

ExpansionMatrix cc_multiplicities(DimVector dim) { return cc_multiplicities(m_coefficients(dim)); }

}  // namespace semican::bases
