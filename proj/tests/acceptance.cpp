// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include "oracles.hpp"
#include "semican/bases.hpp"
#include "semican/geom.hpp"
#include "semican/qpoly.hpp"
#include "semican/separation.hpp"
#include "semican/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace semican;
using core::DimVector;

namespace {

// Pinned limits. Every exact criterion compares rationals with ==.
constexpr double kLimit1Seconds = 1.0;
constexpr double kLimit2Seconds = 30.0;
constexpr double kLimit5Seconds = 120.0;
constexpr double kLimit7Seconds = 10.0;
constexpr double kLimit10Seconds = 30.0;
constexpr int kKernelVectors = 100;
constexpr int kSeparationSample = 500;
constexpr std::uint64_t kSampleSeed = 20240611;
constexpr double kWRegThreshold = 10.0;
constexpr int kWRegHalvings = 6;

std::vector<DimVector> dims_up_to(int bound) {
    std::vector<DimVector> out;
    for (int d1 = 0; d1 <= bound; ++d1)
        for (int d2 = 0; d2 <= bound; ++d2) out.push_back({d1, d2});
    return out;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds)
        out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", n, out.ok ? "PASS" : "FAIL", name.c_str(), secs,
                out.ok ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
}

std::string label(DimVector d) { return core::to_string(d); }

// All instances with d1, d2 <= 3, plus a seeded sample at (4,4).
std::vector<flag::Instance> separation_instances() {
    std::vector<flag::Instance> out;
    for (const auto d : dims_up_to(3))
        for (auto& inst : flag::enumerate_instances(d)) out.push_back(std::move(inst));
    auto big = flag::enumerate_instances({4, 4});
    std::mt19937_64 rng(kSampleSeed);
    std::shuffle(big.begin(), big.end(), rng);
    big.resize(std::min<std::size_t>(big.size(), kSeparationSample));
    for (auto& inst : big) out.push_back(std::move(inst));
    return out;
}

}  // namespace

int main() {
    criterion(1, "m = identity from verify on (1,1) and (2,1)", kLimit1Seconds, [] {
        Outcome o;
        for (const DimVector d : {DimVector{1, 1}, DimVector{2, 1}}) {
            app::VerifyOptions opts;
            opts.dim = d;
            const auto rep = app::run_verify(opts);
            if (!rep.pass()) o.fail(label(d) + ": " + rep.first_failure);
            if (!rep.m_matrix || rep.m_matrix->entries != RatMatrix::identity(static_cast<std::size_t>(d.min() + 1)))
                o.fail(label(d) + ": m is not the identity");
        }
        return o;
    });

    criterion(2, "m unitriangular and integral, n = signed m nonnegative, d1,d2 <= 3", kLimit2Seconds, [] {
        Outcome o;
        for (const auto d : dims_up_to(3)) {
            const auto m = bases::m_coefficients(d);
            const auto n = bases::cc_multiplicities(m);
            for (int rp = 0; rp <= d.min(); ++rp)
                for (int r = 0; r <= d.min(); ++r) {
                    const Rational& v = m(rp, r);
                    const std::string at = label(d) + " (" + std::to_string(rp) + "," + std::to_string(r) + ")";
                    if (rp == r && v != 1) o.fail("diagonal " + at);
                    if (rp > r && v != 0) o.fail("support " + at);
                    if (v.get_den() != 1) o.fail("integrality " + at);
                    // sign from the parity of the orbit dimension difference, computed here from r(d1 + d2 - r)
                    const int diff = rp * (d.total() - rp) - r * (d.total() - r);
                    const Rational expect = (diff % 2 == 0 ? 1 : -1) * v;
                    if (n(rp, r) != expect) o.fail("n sign twist " + at);
                    if (n(rp, r) < 0) o.fail("n negative " + at);
                    if (rp == r && n(rp, r) != 1) o.fail("n diagonal " + at);
                }
        }
        return o;
    });

    criterion(3, "section identity on every monomial function, d1,d2 <= 3", 0, [] {
        Outcome o;
        for (const auto d : dims_up_to(3)) {
            const auto tables = bases::MonomialTables::build(d);
            for (std::size_t w = 0; w < tables.words.size(); ++w) {
                bases::ConstructibleFnE f{d, RatVector(static_cast<std::size_t>(d.min() + 1))};
                for (std::size_t r = 0; r < f.values.size(); ++r) f.values[r] = tables.e_side(w, r);
                const auto lifted = bases::psi_inverse(f, tables);
                for (int r = 0; r <= d.min(); ++r)
                    if (lifted.at(r, 0) != f.at(r)) o.fail(label(d) + " word " + tables.words[w].to_string());
            }
        }
        return o;
    });

    criterion(4, "random E-side kernel vectors lift to zero, d1,d2 <= 3", 0, [] {
        Outcome o;
        std::mt19937_64 rng(kSampleSeed);
        std::uniform_int_distribution<int> coef(-7, 7);
        for (const auto d : dims_up_to(3)) {
            const auto tables = bases::MonomialTables::build(d);
            const auto basis = nullspace(tables.e_side.transpose());
            for (const auto& b : basis) {
                const auto img = mat_vec(tables.e_side.transpose(), b);
                for (const auto& v : img)
                    if (v != 0) o.fail(label(d) + ": kernel basis vector is not in the kernel");
            }
            if (basis.empty()) continue;
            for (int t = 0; t < kKernelVectors; ++t) {
                RatVector v(tables.words.size());
                for (const auto& b : basis) {
                    const Rational c = coef(rng);
                    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
                }
                for (const auto& x : bases::lift_coefficients(v, tables).values)
                    if (x != 0) o.fail(label(d) + ": nonzero lift");
            }
        }
        return o;
    });

    const auto instances = separation_instances();
    std::vector<separation::SeparationReport> reports;
    criterion(5,
              "separation bilinear with chi = 1 on " + std::to_string(instances.size()) +
                  " instances (all d1,d2 <= 3, 500 sampled at (4,4))",
              kLimit5Seconds, [&] {
                  Outcome o;
                  for (const auto& inst : instances) {
                      const std::string at = inst.shape.composition_string() + " y0 {" + inst.y0.to_string() + "}";
                      try {
                          reports.push_back(separation::build_and_separate(inst.shape, inst.y0));
                      } catch (const separation::SeparationError& e) {
                          o.fail(e.what());
                          continue;
                      }
                      const auto& r = reports.back();
                      if (!r.bilinear.ok) o.fail("not bilinear: " + at);
                      if (r.chi_phi != 1) o.fail("chi != 1: " + at);
                  }
                  return o;
              });

    criterion(6, "back-substitution recovers the trace polynomial term for term", 0, [&] {
        Outcome o;
        if (reports.size() != instances.size()) o.fail("criterion 5 did not produce every report");
        for (const auto& r : reports) {
            std::map<sympoly::VarId, sympoly::MultiPoly> forward;
            for (const auto& s : r.m_prime) forward[s.var] = s.value;
            for (const auto& s : r.x_prime) forward[s.var] = s.value;
            const auto back = sympoly::substitute(r.separated, forward);
            if (back != sympoly::expand_trace(r.shape, r.y0))
                o.fail(r.shape.composition_string() + " y0 {" + r.y0.to_string() + "}");
        }
        return o;
    });

    criterion(7, "Hessian and pairing-form rank = dim S + dim dual - d1 d2, tangent dim = d1 d2, d1,d2 <= 4",
              kLimit7Seconds, [] {
                  Outcome o;
                  for (const auto d : dims_up_to(4))
                      for (const auto& orbit : core::enumerate_orbits(d)) {
                          const auto p = geom::from_class(core::ConormalComponent{orbit}.generic_class());
                          const int r = orbit.r, s = d.min() - orbit.r;
                          const int expected = r * (d.total() - r) + s * (d.total() - s) - d.d1 * d.d2;
                          const std::string at = label(d) + " r=" + std::to_string(r);
                          if (oracle::exact_rank(geom::bilinear_form_B(p)) != static_cast<std::size_t>(expected))
                              o.fail("pairing rank " + at);
                          if (oracle::exact_rank(geom::hessian(p)) != static_cast<std::size_t>(expected))
                              o.fail("hessian rank " + at);
                          if (!geom::hessian_rank_check(p)) o.fail("hessian_rank_check " + at);
                          if (geom::conormal_tangent(p).size() != static_cast<std::size_t>(d.d1 * d.d2))
                              o.fail("tangent dimension " + at);
                      }
                  return o;
              });

    criterion(8, "parity of dim Lambda - dim dual - dim S, d1,d2 <= 8", 0, [] {
        Outcome o;
        for (const auto d : dims_up_to(8))
            for (const auto& orbit : core::enumerate_orbits(d)) {
                const int r = orbit.r, s = d.min() - r;
                const int direct = d.d1 * d.d2 - s * (d.total() - s) - r * (d.total() - r);
                if (direct % 2 != 0 || core::sign_parity(orbit) != direct)
                    o.fail(label(d) + " r=" + std::to_string(r));
            }
        return o;
    });

    criterion(9, "canonical stalks equal Grassmannian counts at q = 1, d1,d2 <= 4; (2,2) r=1 vertex value 2", 0, [] {
        Outcome o;
        for (const auto d : dims_up_to(4)) {
            const int a = d.min();  // the small resolution fibers over the smaller side
            for (int r = 0; r <= d.min(); ++r) {
                const auto f = bases::canonical_fn(d, r);
                for (int rp = 0; rp <= d.min(); ++rp) {
                    const Rational expect =
                        rp <= r ? Rational(gauss_binom(a - rp, a - r).at_one()) : Rational(0);
                    if (f.at(rp) != expect)
                        o.fail(label(d) + " r=" + std::to_string(r) + " at r'=" + std::to_string(rp));
                }
            }
        }
        if (bases::canonical_fn({2, 2}, 1).at(0) != 2) o.fail("(2,2) r=1 at the origin");
        return o;
    });

    criterion(10, "w-regularity ratios bounded (10x over 6 halvings), all orbit pairs d1,d2 <= 3, seeds 1,2,3",
              kLimit10Seconds, [] {
                  Outcome o;
                  for (const auto d : dims_up_to(3)) {
                      const auto orbits = core::enumerate_orbits(d);
                      for (const auto& in : orbits)
                          for (const auto& out : orbits) {
                              if (in.r >= out.r) continue;
                              for (std::uint64_t seed : {1, 2, 3}) {
                                  geom::WRegOptions w;
                                  w.seed = seed;
                                  w.threshold = kWRegThreshold;
                                  w.halvings = kWRegHalvings;
                                  if (!geom::w_regularity_sample(in, out, w).pass)
                                      o.fail(label(d) + " " + std::to_string(in.r) + "<" + std::to_string(out.r) +
                                             " seed " + std::to_string(seed));
                              }
                          }
                  }
                  return o;
              });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
