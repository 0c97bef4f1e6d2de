#pragma once

// Experiment orchestration: config files, repeated sampling + evaluation,
// parameter sweeps, summary tables and CSV/JSON output.

#include "lpbench/evaluator.hpp"
#include "lpbench/graph.hpp"
#include "lpbench/predictors.hpp"
#include "lpbench/samplers.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbench {

inline constexpr std::string_view kLibraryVersion = "1.0.0";

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DatasetSource {
    std::string id;    // name used in output rows
    std::string path;  // edge-list file, or empty for synthetic
    std::string synthetic;  // "kind:n[:m[:triad]]", used when path is empty
    std::uint64_t synthetic_seed = 1;

    friend bool operator==(const DatasetSource&, const DatasetSource&) = default;
};

enum class OutputFormat { Csv, Json, Both };

enum class DegreeSource { Full, Train };

struct ExperimentConfig {
    std::vector<DatasetSource> datasets;
    LoadOptions load;
    std::vector<SamplerMethod> samplers{std::begin(kAllSamplers), std::end(kAllSamplers)};
    std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
    std::uint32_t repetitions = 100;
    double sample_fraction = 0.9;
    std::uint32_t walkers = 100;
    double burn_probability = 0.8;
    /// Sweep grids; "cap" entries resolve to min(1000, |V|) per dataset.
    std::vector<std::string> sweep_walkers;
    std::vector<double> sweep_burn;
    std::uint64_t auc_comparisons = kDefaultAucComparisons;
    bool compute_precision = true;
    bool histograms = false;
    DegreeSource histogram_degrees = DegreeSource::Full;
    std::uint64_t master_seed = 1;
    std::string output_dir = "results";
    OutputFormat format = OutputFormat::Csv;
    unsigned jobs = 1;

    void validate() const;
};

/// Flat "key = value" text. Lines whose first non-blank character is '#' are
/// comments; list values are comma-separated; `dataset` and `synthetic` may
/// repeat.
[[nodiscard]] ExperimentConfig parse_config(std::istream& in);
[[nodiscard]] ExperimentConfig load_config(const std::string& path);

[[nodiscard]] nlohmann::json config_to_json(const ExperimentConfig& config);
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& j);
[[nodiscard]] bool same_config(const ExperimentConfig& a, const ExperimentConfig& b);

struct ExperimentResult {
    std::string dataset;
    SamplerMethod sampler = SamplerMethod::PR;
    double sample_fraction = 0.9;
    std::optional<std::uint32_t> walkers;       // FS only
    std::optional<double> burn_probability;     // FF only
    Measure measure = Measure::CN;
    std::uint32_t reps = 0;                     // successful repetitions
    std::uint32_t failed_reps = 0;
    double auc_mean = 0.0;
    double auc_std = 0.0;
    double precision_mean = 0.0;
    double precision_std = 0.0;
    std::string failure;                        // first failure message, if any

    friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

struct HistogramResult {
    std::string dataset;
    SamplerMethod sampler = SamplerMethod::PR;
    std::string params;
    Histogram histogram;
};

struct ExperimentOutput {
    std::vector<ExperimentResult> results;
    std::vector<HistogramResult> histograms;
    [[nodiscard]] bool any_failure() const;
};

/// A prepared dataset: the giant component of the source graph.
struct Dataset {
    std::string id;
    Graph graph;
};

[[nodiscard]] Dataset prepare_dataset(const DatasetSource& source, const LoadOptions& load);

/// seed = hash(master, dataset, sampler, canonical params, rep) via SeedHasher.
[[nodiscard]] std::uint64_t cell_seed(std::uint64_t master, std::string_view dataset, const SamplerSpec& spec,
                                      std::uint32_t rep);

/// Runs `repetitions` partitions for each sampler spec on one dataset and
/// evaluates every configured measure on each. Failures are recorded per cell.
[[nodiscard]] ExperimentOutput run_on_dataset(const ExperimentConfig& config, const Dataset& dataset,
                                              const std::vector<SamplerSpec>& specs);

/// The configured samplers at their base parameters, on every dataset.
[[nodiscard]] ExperimentOutput run_experiment(const ExperimentConfig& config);

/// FS over sweep_walkers and FF over sweep_burn, on every dataset.
[[nodiscard]] ExperimentOutput run_sweep(const ExperimentConfig& config);

/// Resolves the walker grid against |V|; throws SamplerParameterError naming
/// the cap min(1000, |V|) when a value exceeds it.
[[nodiscard]] std::vector<std::uint32_t> resolve_walker_grid(const std::vector<std::string>& grid,
                                                             std::size_t node_count);

struct BestMeasureRow {
    std::string dataset;
    SamplerMethod sampler = SamplerMethod::PR;
    std::string params;
    std::vector<Measure> winners;
    double best_auc = 0.0;
};

inline constexpr double kDefaultTieTolerance = 0.005;

/// Per (dataset, sampler, params): measures within `tie_tolerance` of the best mean AUC.
[[nodiscard]] std::vector<BestMeasureRow> best_measure_table(const std::vector<ExperimentResult>& results,
                                                             double tie_tolerance = kDefaultTieTolerance);

// --- output --------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "dataset,sampler,s_f,m,p_f,measure,reps,auc_mean,auc_std,precision_mean,precision_std";

void write_results_csv(std::ostream& out, const std::vector<ExperimentResult>& results);
[[nodiscard]] nlohmann::json results_to_json(const std::vector<ExperimentResult>& results,
                                             const ExperimentConfig& config);
[[nodiscard]] std::vector<ExperimentResult> results_from_json(const nlohmann::json& j);
void write_histograms_csv(std::ostream& out, const std::vector<HistogramResult>& histograms);

/// Writes results.csv / results.json (and histograms.csv when present) to
/// `directory`, creating it if needed. Returns the written paths.
std::vector<std::filesystem::path> emit_results(const ExperimentOutput& output, const ExperimentConfig& config,
                                                const std::filesystem::path& directory);

void write_best_table(std::ostream& out, const std::vector<BestMeasureRow>& rows);

struct StatsRow {
    std::string dataset;
    std::optional<GraphStats> stats;  // of the giant component
    std::string error;
};

[[nodiscard]] std::vector<StatsRow> stats_report(const std::vector<std::string>& paths, const LoadOptions& load);
void write_stats_table(std::ostream& out, const std::vector<StatsRow>& rows);

}  // namespace lpbench
