// lpbench: link prediction under graph sampling.
//
//   lpbench stats <edge-list>...
//   lpbench run <config> [overrides]
//   lpbench sweep <config> [overrides]
//
// Exit status: 0 success, 1 some cell failed, 2 config or load error.

#include "lpbench/harness.hpp"
#include "lpbench/intersect.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>

namespace {

constexpr int kExitCellFailure = 1;
constexpr int kExitConfigError = 2;

struct LoaderFlags {
    std::vector<std::string> comment_prefixes;
    std::string separator;
    bool one_indexed = false;

    void apply(lpbench::LoadOptions& load) const {
        if (!comment_prefixes.empty()) load.comment_prefixes = comment_prefixes;
        if (!separator.empty()) load.separator = separator == "tab" ? "\t" : separator;
        if (one_indexed) load.one_indexed = true;
    }
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> reps;
    std::optional<double> sf;
    std::optional<std::uint64_t> auc_n;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<unsigned> jobs;

    void apply(lpbench::ExperimentConfig& c) const {
        if (seed) c.master_seed = *seed;
        if (reps) c.repetitions = *reps;
        if (sf) c.sample_fraction = *sf;
        if (auc_n) c.auc_comparisons = *auc_n;
        if (out) c.output_dir = *out;
        if (format) c.format = *format == "json" ? lpbench::OutputFormat::Json : lpbench::OutputFormat::Csv;
        if (jobs) c.jobs = *jobs;
    }
};

void add_loader_flags(CLI::App* cmd, LoaderFlags& flags) {
    cmd->add_option("--comment", flags.comment_prefixes, "Comment line prefix (repeatable; default '#' and '%')");
    cmd->add_option("--separator", flags.separator, "Field separator; 'tab' or a literal string (default: whitespace)");
    cmd->add_flag("--one-indexed", flags.one_indexed, "Numeric labels start at 1");
}

void add_run_flags(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--reps", o.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
    cmd->add_option("--sf", o.sf, "Training fraction s_f in (0, 1)");
    cmd->add_option("--auc-n", o.auc_n, "Comparisons per AUC estimate")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

int run_command(const std::string& config_path, const Overrides& overrides, const LoaderFlags& loader, bool sweep) {
    lpbench::ExperimentConfig config;
    lpbench::ExperimentOutput output;
    try {
        config = lpbench::load_config(config_path);
        overrides.apply(config);
        loader.apply(config.load);
        config.validate();
        output = sweep ? lpbench::run_sweep(config) : lpbench::run_experiment(config);
    } catch (const std::exception& e) {
        std::cerr << "lpbench: " << e.what() << '\n';
        return kExitConfigError;
    }
    try {
        for (const auto& path : lpbench::emit_results(output, config, config.output_dir)) {
            std::cerr << "wrote " << path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "lpbench: " << e.what() << '\n';
        return kExitConfigError;
    }
    lpbench::write_best_table(std::cout, lpbench::best_measure_table(output.results));
    if (output.any_failure()) {
        for (const auto& r : output.results) {
            if (r.failed_reps > 0 && r.measure == config.measures.front()) {
                std::cerr << fmt::format("lpbench: {} {} failed {} of {} reps: {}\n", r.dataset,
                                         lpbench::sampler_name(r.sampler), r.failed_reps, r.failed_reps + r.reps,
                                         r.failure);
            }
        }
        return kExitCellFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link prediction benchmark under graph sampling"};
    app.set_version_flag("--version", std::string(lpbench::kLibraryVersion));
    app.require_subcommand(1);

    std::string simd;
    app.add_option("--simd", simd, "Intersection kernel: scalar or avx2 (default: best available)")
        ->check(CLI::IsMember({"scalar", "avx2"}));

    LoaderFlags loader;
    Overrides overrides;
    std::vector<std::string> stats_paths;
    std::string config_path;

    auto* stats = app.add_subcommand("stats", "Table of |V|, |E|, <k>, C, H for each giant component");
    stats->add_option("edge-lists", stats_paths)->required();
    add_loader_flags(stats, loader);

    auto* run = app.add_subcommand("run", "Run every configured sampler and measure");
    auto* sweep = app.add_subcommand("sweep", "Sweep FS walkers (sweep_m) and FF burn probability (sweep_pf)");
    for (auto* cmd : {run, sweep}) {
        cmd->add_option("config", config_path)->required();
        add_run_flags(cmd, overrides);
        add_loader_flags(cmd, loader);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    if (!simd.empty()) {
        try {
            lpbench::set_simd_level(simd == "avx2" ? lpbench::SimdLevel::Avx2 : lpbench::SimdLevel::Scalar);
        } catch (const std::exception& e) {
            std::cerr << "lpbench: " << e.what() << '\n';
            return kExitConfigError;
        }
    }

    if (stats->parsed()) {
        lpbench::LoadOptions load;
        loader.apply(load);
        const auto rows = lpbench::stats_report(stats_paths, load);
        lpbench::write_stats_table(std::cout, rows);
        for (const auto& row : rows) {
            if (!row.stats) return kExitConfigError;
        }
        return 0;
    }
    return run_command(config_path, overrides, loader, sweep->parsed());
}
