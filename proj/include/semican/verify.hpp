#pragma once

// The end-to-end verification pipeline behind `semican verify`, and the JSON /
// CSV forms of its reports and of the orbit and separation tables.

#include "semican/bases.hpp"
#include "semican/cache.hpp"
#include "semican/separation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semican::app {

using core::DimVector;

inline constexpr int kSchemaVersion = 1;

struct VerifyOptions {
    DimVector dim;
    std::uint64_t seed = 1;
    bool run_wreg = true;
    std::optional<TableCache> cache;
    int exhaustive_bound = 3;  // separation is exhaustive when d1, d2 <= this
    int sample_size = 500;     // otherwise this many seeded instances
    int kernel_vectors = 100;
};

struct SeparationSummary {
    std::size_t instances_total = 0;
    std::size_t instances_run = 0;
    bool exhaustive = false;
    bool all_bilinear = true;
    bool all_chi_one = true;
    bool all_back_substitution = true;
    bool all_ok = true;  // every per-instance check, including the critical-locus consistency
};

struct GeometrySummary {
    std::size_t hessian_points = 0;
    bool hessian_ok = true;
    bool tangent_ok = true;
    bool wreg_run = false;
    std::size_t wreg_pairs = 0;
    bool wreg_pass = true;
};

struct VerifyReport {
    DimVector dim;
    std::uint64_t seed = 0;
    std::optional<bases::ExpansionMatrix> m_matrix;
    std::optional<bases::ExpansionMatrix> n_matrix;
    bool m_structure_ok = false;
    bool section_ok = false;
    bool kernel_ok = false;
    std::size_t kernel_dim = 0;
    bool parity_ok = false;
    SeparationSummary separation;
    GeometrySummary geometry;
    bool cache_hit = false;
    std::vector<std::pair<std::string, double>> timings;  // stage -> milliseconds
    std::string first_failure;                            // empty on PASS

    bool pass() const { return first_failure.empty(); }
};

VerifyReport run_verify(const VerifyOptions& opts);

/// Timings and cache status are diagnostics and only included on request, so
/// that the default output is byte-stable.
nlohmann::json to_json(const VerifyReport& rep, bool diagnostics);
std::string to_csv(const VerifyReport& rep);

nlohmann::json matrix_json(const RatMatrix& m);

nlohmann::json orbits_json(DimVector dim);
std::string orbits_csv(DimVector dim);

nlohmann::json separation_json(const separation::SeparationReport& rep);
/// Header line plus one row per report.
std::string separation_csv(const std::vector<separation::SeparationReport>& reps);

}  // namespace semican::app
