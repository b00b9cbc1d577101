#include "semican/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace semican;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct Common {
    int d1 = -1;
    int d2 = -1;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--d1", c.d1, "dimension at vertex 1")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--d2", c.d2, "dimension at vertex 2")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

int emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(c.output);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << c.output << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

flag::NormalFormY parse_y0(const std::string& text) {
    flag::NormalFormY y0;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("y0 entry '" + item + "' is not of the form i:j");
        try {
            y0.entries.emplace(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("y0 entry '" + item + "' is not of the form i:j");
        }
    }
    return y0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for semicanonical and canonical bases of the A2 quiver"};
    app.require_subcommand(1);

    Common orbits_opts;
    auto* orbits = app.add_subcommand("orbits", "list rank orbits with dimensions, dual ranks and parity");
    add_common(orbits, orbits_opts);

    Common verify_opts;
    std::uint64_t seed = 1;
    bool skip_wreg = false, no_cache = false, timings = false;
    int max_dim = 4;
    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    add_common(verify, verify_opts);
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_flag("--skip-wreg", skip_wreg, "skip the numerical w-regularity sampling");
    verify->add_flag("--no-cache", no_cache, "neither read nor write the monomial table cache");
    verify->add_flag("--timings", timings, "include per-stage timings and cache status");
    verify->add_option("--max-dim", max_dim, "largest d1, d2 accepted");

    Common sep_opts;
    std::string comp_text, y0_text;
    bool all = false;
    auto* separate = app.add_subcommand("separate", "separate variables in the trace function of one or more instances");
    add_common(separate, sep_opts);
    auto* comp_opt = separate->add_option("--comp", comp_text, "composition, e.g. 1,2,2,1");
    auto* y0_opt = separate->add_option("--y0", y0_text, "normal-form positions i:j, e.g. 1:1,2:2");
    separate->add_flag("--all", all, "every admissible y0 (every composition if --comp is absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (orbits->parsed()) {
            const core::DimVector dim{orbits_opts.d1, orbits_opts.d2};
            core::validate(dim);
            return emit(orbits_opts, orbits_opts.format == "csv" ? app::orbits_csv(dim)
                                                                 : app::orbits_json(dim).dump(2) + "\n");
        }

        if (verify->parsed()) {
            const core::DimVector dim{verify_opts.d1, verify_opts.d2};
            core::validate(dim);
            if (dim.d1 > max_dim || dim.d2 > max_dim) {
                std::cerr << "error: d1, d2 must be at most " << max_dim << " (raise with --max-dim)\n";
                return kExitUsage;
            }
            app::VerifyOptions opts;
            opts.dim = dim;
            opts.seed = seed;
            opts.run_wreg = !skip_wreg;
            if (!no_cache) opts.cache.emplace(app::default_cache_dir());
            const auto rep = app::run_verify(opts);
            const int written = emit(verify_opts, verify_opts.format == "csv"
                                                      ? app::to_csv(rep)
                                                      : app::to_json(rep, timings).dump(2) + "\n");
            if (written != kExitPass) return written;
            if (!rep.pass()) {
                std::cerr << "FAIL: " << rep.first_failure << "\n";
                return kExitCheckFailed;
            }
            return kExitPass;
        }

        // separate
        const core::DimVector dim{sep_opts.d1, sep_opts.d2};
        core::validate(dim);
        if (!all && (comp_opt->count() == 0 || y0_opt->count() == 0)) {
            std::cerr << "error: separate needs --comp and --y0, or --all\n";
            return kExitUsage;
        }
        if (all && y0_opt->count() > 0) {
            std::cerr << "error: --y0 and --all are exclusive\n";
            return kExitUsage;
        }
        std::vector<flag::Instance> instances;
        if (comp_opt->count() > 0) {
            const auto shape = flag::flag_shape(flag::parse_composition(comp_text));
            if (shape.dim() != dim) {
                std::cerr << "error: composition " << comp_text << " has content " << core::to_string(shape.dim())
                          << ", expected " << core::to_string(dim) << "\n";
                return kExitUsage;
            }
            if (all)
                for (auto& y0 : flag::admissible_matchings(shape)) instances.push_back({shape, std::move(y0)});
            else
                instances.push_back({shape, parse_y0(y0_text)});
        } else {
            instances = flag::enumerate_instances(dim);
        }
        for (const auto& inst : instances)
            if (auto err = flag::check_normal_form(inst.shape, inst.y0); !err.empty()) {
                std::cerr << "error: y0 {" << inst.y0.to_string() << "}: " << err << "\n";
                return kExitUsage;
            }

        std::vector<separation::SeparationReport> reports;
        nlohmann::json list = nlohmann::json::array();
        bool ok = true;
        for (const auto& inst : instances) {
            try {
                reports.push_back(separation::build_and_separate(inst.shape, inst.y0));
                list.push_back(app::separation_json(reports.back()));
                ok = ok && reports.back().ok();
            } catch (const separation::SeparationError& e) {
                ok = false;
                list.push_back({{"composition", inst.shape.composition_string()},
                                {"y0", inst.y0.to_string()},
                                {"bilinear_ok", false},
                                {"error", e.what()},
                                {"ok", false}});
            }
        }
        const nlohmann::json doc{{"schema_version", app::kSchemaVersion},
                                 {"command", "separate"},
                                 {"dim", {{"d1", dim.d1}, {"d2", dim.d2}}},
                                 {"reports", std::move(list)}};
        const int written =
            emit(sep_opts, sep_opts.format == "csv" ? app::separation_csv(reports) : doc.dump(2) + "\n");
        if (written != kExitPass) return written;
        return ok ? kExitPass : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
