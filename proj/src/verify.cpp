#include "semican/verify.hpp"

#include "semican/geom.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace semican::app {

using nlohmann::json;

namespace {

class StageClock {
public:
    explicit StageClock(VerifyReport& rep) : rep_(rep) {}
    void lap(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        rep_.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
        last_ = now;
    }

private:
    VerifyReport& rep_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void fail(VerifyReport& rep, const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
}

std::string pq(long v) { return to_pq_string(Rational(v)); }

json dim_json(DimVector d) { return json{{"d1", d.d1}, {"d2", d.d2}}; }

bool section_identity(const bases::MonomialTables& tables) {
    const auto dim = tables.dim;
    const auto n = static_cast<std::size_t>(dim.min() + 1);
    for (std::size_t w = 0; w < tables.words.size(); ++w) {
        bases::ConstructibleFnE f{dim, RatVector(n)};
        for (std::size_t r = 0; r < n; ++r) f.values[r] = tables.e_side(w, r);
        if (bases::restrict_to_E(bases::psi_inverse(f, tables)) != f) return false;
    }
    for (int r = 0; r <= dim.min(); ++r) {
        const auto f = bases::canonical_fn(dim, r);
        if (bases::restrict_to_E(bases::psi_inverse(f, tables)) != f) return false;
    }
    return true;
}

bool kernel_invariance(const bases::MonomialTables& tables, int count, std::uint64_t seed, std::size_t& kernel_dim) {
    const auto basis = nullspace(tables.e_side.transpose());
    kernel_dim = basis.size();
    if (basis.empty()) return true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < count; ++trial) {
        RatVector v(tables.words.size());
        for (const auto& b : basis) {
            const Rational c = coef(rng);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        for (const auto& value : bases::lift_coefficients(v, tables).values)
            if (value != 0) return false;
    }
    return true;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    core::validate(opts.dim);
    const auto dim = opts.dim;
    VerifyReport rep;
    rep.dim = dim;
    rep.seed = opts.seed;
    StageClock clock(rep);

    std::optional<bases::MonomialTables> tables;
    try {
        auto cached = load_or_build(dim, opts.cache);
        rep.cache_hit = cached.hit;
        tables = std::move(cached.tables);
    } catch (const std::exception& e) {
        fail(rep, std::string("monomial tables: ") + e.what());
    }
    clock.lap("monomial_tables");

    if (tables) {
        try {
            rep.m_matrix = bases::m_coefficients(*tables);
            const auto err = bases::check_m_structure(*rep.m_matrix);
            rep.m_structure_ok = err.empty();
            if (!err.empty()) fail(rep, "m structure: " + err);
            rep.n_matrix = bases::cc_multiplicities(*rep.m_matrix);
        } catch (const std::exception& e) {
            rep.m_structure_ok = false;
            fail(rep, std::string("m/n matrices: ") + e.what());
        }
        clock.lap("m_n_matrices");

        try {
            rep.section_ok = section_identity(*tables);
            if (!rep.section_ok) fail(rep, "section identity");
            rep.kernel_ok = kernel_invariance(*tables, opts.kernel_vectors, opts.seed, rep.kernel_dim);
            if (!rep.kernel_ok) fail(rep, "kernel invariance");
        } catch (const std::exception& e) {
            fail(rep, std::string("section/kernel: ") + e.what());
        }
        clock.lap("section_kernel");
    }

    rep.parity_ok = true;
    for (const auto& o : core::enumerate_orbits(dim))
        if (core::sign_parity(o) % 2 != 0) rep.parity_ok = false;
    if (!rep.parity_ok) fail(rep, "parity");
    clock.lap("parity");

    {
        auto instances = flag::enumerate_instances(dim);
        auto& sep = rep.separation;
        sep.instances_total = instances.size();
        sep.exhaustive = dim.d1 <= opts.exhaustive_bound && dim.d2 <= opts.exhaustive_bound;
        std::vector<std::size_t> picked(instances.size());
        std::iota(picked.begin(), picked.end(), std::size_t{0});
        if (!sep.exhaustive && picked.size() > static_cast<std::size_t>(opts.sample_size)) {
            std::mt19937_64 rng(opts.seed);
            std::shuffle(picked.begin(), picked.end(), rng);
            picked.resize(static_cast<std::size_t>(opts.sample_size));
            std::sort(picked.begin(), picked.end());
        }
        for (std::size_t idx : picked) {
            const auto& inst = instances[idx];
            const std::string label = inst.shape.composition_string() + " y0 {" + inst.y0.to_string() + "}";
            ++sep.instances_run;
            try {
                const auto r = separation::build_and_separate(inst.shape, inst.y0);
                if (r.chi_phi != 1) sep.all_chi_one = false;
                if (!r.back_substitution_ok) sep.all_back_substitution = false;
                if (!r.ok()) {
                    sep.all_ok = false;
                    fail(rep, "separation " + label);
                }
            } catch (const std::exception& e) {
                sep.all_bilinear = sep.all_chi_one = sep.all_ok = false;
                fail(rep, std::string("separation: ") + e.what());
            }
        }
        clock.lap("separation");
    }

    {
        auto& geo = rep.geometry;
        for (const auto& o : core::enumerate_orbits(dim)) {
            const auto c = geom::hessian_check(geom::from_class(core::ConormalComponent{o}.generic_class()));
            ++geo.hessian_points;
            if (!c.generic) geo.tangent_ok = false;
            if (!c.ok()) geo.hessian_ok = false;
        }
        if (!geo.tangent_ok) fail(rep, "conormal tangent dimension");
        if (!geo.hessian_ok) fail(rep, "hessian rank");
        clock.lap("hessian");

        if (opts.run_wreg) {
            geo.wreg_run = true;
            const auto orbits = core::enumerate_orbits(dim);
            for (const auto& in : orbits)
                for (const auto& out : orbits) {
                    if (in.r >= out.r) continue;
                    ++geo.wreg_pairs;
                    geom::WRegOptions w;
                    w.seed = opts.seed;
                    if (!geom::w_regularity_sample(in, out, w).pass) {
                        geo.wreg_pass = false;
                        fail(rep, "w-regularity " + std::to_string(in.r) + " < " + std::to_string(out.r));
                    }
                }
            clock.lap("w_regularity");
        }
    }
    return rep;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_pq_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const VerifyReport& rep, bool diagnostics) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["dim"] = dim_json(rep.dim);
    j["seed"] = rep.seed;
    j["verdict"] = rep.pass() ? "PASS" : "FAIL";
    if (!rep.pass()) j["first_failure"] = rep.first_failure;
    j["m_matrix"] = rep.m_matrix ? matrix_json(rep.m_matrix->entries) : json(nullptr);
    j["n_matrix"] = rep.n_matrix ? matrix_json(rep.n_matrix->entries) : json(nullptr);
    j["m_identity"] = rep.m_matrix && rep.m_matrix->is_identity();
    j["m_structure_ok"] = rep.m_structure_ok;
    j["section_ok"] = rep.section_ok;
    j["kernel_ok"] = rep.kernel_ok;
    j["kernel_dim"] = rep.kernel_dim;
    j["parity_ok"] = rep.parity_ok;
    const auto& s = rep.separation;
    j["separation"] = {{"instances_total", s.instances_total},
                       {"instances_run", s.instances_run},
                       {"exhaustive", s.exhaustive},
                       {"all_bilinear_ok", s.all_bilinear},
                       {"all_chi_phi_one", s.all_chi_one},
                       {"all_back_substitution_ok", s.all_back_substitution},
                       {"all_ok", s.all_ok}};
    const auto& g = rep.geometry;
    j["geometry"] = {{"hessian_points", g.hessian_points},
                     {"hessian_ok", g.hessian_ok},
                     {"conormal_tangent_ok", g.tangent_ok},
                     {"w_regularity", g.wreg_run ? json(g.wreg_pass ? "PASS" : "FAIL") : json("SKIPPED")},
                     {"w_regularity_pairs", g.wreg_pairs}};
    if (diagnostics) {
        json t = json::object();
        for (const auto& [stage, ms] : rep.timings) t[stage] = ms;
        j["timings_ms"] = std::move(t);
        j["cache"] = rep.cache_hit ? "hit" : "miss";
    }
    return j;
}

std::string to_csv(const VerifyReport& rep) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    out << "check,value\n";
    out << "d1," << rep.dim.d1 << "\nd2," << rep.dim.d2 << "\nseed," << rep.seed << "\n";
    out << "verdict," << (rep.pass() ? "PASS" : "FAIL") << "\n";
    out << "m_identity," << flag(rep.m_matrix && rep.m_matrix->is_identity()) << "\n";
    out << "m_structure_ok," << flag(rep.m_structure_ok) << "\n";
    out << "section_ok," << flag(rep.section_ok) << "\n";
    out << "kernel_ok," << flag(rep.kernel_ok) << "\n";
    out << "parity_ok," << flag(rep.parity_ok) << "\n";
    out << "separation_instances_run," << rep.separation.instances_run << "\n";
    out << "separation_all_ok," << flag(rep.separation.all_ok) << "\n";
    out << "hessian_ok," << flag(rep.geometry.hessian_ok) << "\n";
    out << "conormal_tangent_ok," << flag(rep.geometry.tangent_ok) << "\n";
    out << "w_regularity,"
        << (rep.geometry.wreg_run ? (rep.geometry.wreg_pass ? "PASS" : "FAIL") : "SKIPPED") << "\n";
    return out.str();
}

json orbits_json(DimVector dim) {
    json rows = json::array();
    for (const auto& o : core::enumerate_orbits(dim)) {
        const auto dual = core::dual_orbit(o);
        rows.push_back({{"r", pq(o.r)},
                        {"dim", pq(core::orbit_dim(o))},
                        {"dual_rank", pq(dual.r)},
                        {"dual_dim", pq(core::orbit_dim(dual))},
                        {"parity", pq(core::sign_parity(o))}});
    }
    return rows;
}

std::string orbits_csv(DimVector dim) {
    std::ostringstream out;
    out << "r,dim,dual_rank,dual_dim,parity\n";
    for (const auto& o : core::enumerate_orbits(dim)) {
        const auto dual = core::dual_orbit(o);
        out << pq(o.r) << "," << pq(core::orbit_dim(o)) << "," << pq(dual.r) << "," << pq(core::orbit_dim(dual))
            << "," << pq(core::sign_parity(o)) << "\n";
    }
    return out.str();
}

json separation_json(const separation::SeparationReport& rep) {
    auto subs = [](const std::vector<separation::Substitution>& v) {
        json out = json::array();
        for (const auto& s : v) out.push_back({{"var", s.var.to_string()}, {"value", s.value.to_string()}});
        return out;
    };
    auto vars = [](const std::set<sympoly::VarId>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(x.to_string());
        return out;
    };
    json pairs = json::array();
    for (auto [a, b] : rep.set_T) pairs.push_back(json::array({a, b}));
    json b = json::array();
    for (std::size_t r = 0; r < rep.bilinear.B.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rep.bilinear.B.cols(); ++c) row.push_back(rep.bilinear.B(r, c).to_string());
        b.push_back(std::move(row));
    }
    return json{{"composition", rep.shape.composition_string()},
                {"dim", dim_json(rep.shape.dim())},
                {"y0", rep.y0.to_string()},
                {"transfer_pairs", std::move(pairs)},
                {"h", rep.h.to_string()},
                {"m_prime", subs(rep.m_prime)},
                {"m_inverse", subs(rep.m_inverse)},
                {"x_prime", subs(rep.x_prime)},
                {"separated", rep.separated.to_string()},
                {"quadratic_w1", vars(rep.w1)},
                {"quadratic_w2", vars(rep.w2)},
                {"coefficient_vars", vars(rep.vc)},
                {"bilinear_ok", rep.bilinear.ok},
                {"bilinear_matrix", std::move(b)},
                {"hessian_rank", pq(static_cast<long>(rep.hessian_rank))},
                {"x_prime_is_coefficient", rep.x_prime_is_coefficient},
                {"six_term_ok", rep.six_term_ok},
                {"back_substitution_ok", rep.back_substitution_ok},
                {"critical_locus_consistent", rep.critical.consistent()},
                {"chi_phi", pq(rep.chi_phi)},
                {"ok", rep.ok()}};
}

std::string separation_csv(const std::vector<separation::SeparationReport>& reps) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    out << "composition,y0,bilinear_ok,chi_phi,hessian_rank,six_term_ok,back_substitution_ok,ok\n";
    for (const auto& r : reps)
        out << "\"" << r.shape.composition_string() << "\",\"" << r.y0.to_string() << "\"," << flag(r.bilinear.ok)
            << "," << pq(r.chi_phi) << "," << pq(static_cast<long>(r.hessian_rank)) << "," << flag(r.six_term_ok)
            << "," << flag(r.back_substitution_ok) << "," << flag(r.ok()) << "\n";
    return out.str();
}

}  // namespace semican::app
