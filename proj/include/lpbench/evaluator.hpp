#pragma once

// Accuracy of similarity measures on a (training graph, probe set) split.
//
// A "nonexistent" pair is one that is neither a training nor a probe edge.
// The training graph must have the same node set as the full graph.

#include "lpbench/graph.hpp"
#include "lpbench/predictors.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpbench {

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvalScore {
    double auc = 0.0;
    double precision = 0.0;
    std::uint64_t n_comparisons = 0;
};

/// Default number of comparisons for the sampled AUC.
inline constexpr std::uint64_t kDefaultAucComparisons = 100'000;

/// AUC = (n' + 0.5 n'') / n over n independent draws of (uniform probe edge,
/// uniform nonexistent pair). Nonexistent pairs are drawn by rejection over
/// all node pairs.
[[nodiscard]] double auc_sampled(Measure m, const Graph& train, std::span<const Edge> probe, std::uint64_t n,
                                 std::uint64_t seed);

/// One AUC per measure from a single stream of draws. Entry k equals
/// auc_sampled(measures[k], train, probe, n, seed).
[[nodiscard]] std::vector<double> auc_sampled_multi(std::span<const Measure> measures, const Graph& train,
                                                    std::span<const Edge> probe, std::uint64_t n, std::uint64_t seed);

/// The value the sampled estimator converges to, by full enumeration of the
/// nonexistent pairs.
[[nodiscard]] double auc_exact(Measure m, const Graph& train, std::span<const Edge> probe);

/// |E^P ∩ top-|E^P| ranked non-training pairs| / |E^P|, ranked by ranks_before.
[[nodiscard]] double precision(Measure m, const Graph& train, std::span<const Edge> probe);

/// precision() for several measures, sharing the candidate enumeration.
[[nodiscard]] std::vector<double> precision_multi(std::span<const Measure> measures, const Graph& train,
                                                  std::span<const Edge> probe);

// --- probe-set distributions -------------------------------------------

enum class EdgeProperty { Popularity, CommonNeighbors };

[[nodiscard]] std::string_view edge_property_name(EdgeProperty kind) noexcept;

/// Popularity: bin 0 holds value 0, bin b >= 1 holds [2^(b-1), 2^b).
/// CommonNeighbors: bin v holds value v.
struct Binning {
    EdgeProperty kind = EdgeProperty::CommonNeighbors;
    std::size_t bin_count = 0;

    [[nodiscard]] std::size_t bin_of(std::uint64_t value) const noexcept;
    [[nodiscard]] std::uint64_t lower(std::size_t bin) const noexcept;
    /// Exclusive upper bound.
    [[nodiscard]] std::uint64_t upper(std::size_t bin) const noexcept;

    friend bool operator==(const Binning&, const Binning&) = default;
};

/// Bins wide enough for any edge of `g` or of a subgraph of it.
[[nodiscard]] Binning binning_for(const Graph& g, EdgeProperty kind);

struct Histogram {
    Binning binning;
    std::vector<double> mass;
    std::size_t rep_count = 1;
};

/// Distribution of the property over probe edges. Degrees and neighborhoods
/// are read from `degree_source` (default: the full graph); binning always
/// comes from the full graph so histograms of one dataset are comparable.
[[nodiscard]] Histogram probe_distribution(const Graph& full, std::span<const Edge> probe, EdgeProperty kind,
                                           const Graph* degree_source = nullptr);

/// Per-bin mean; throws EvaluationError on mismatched binning or empty input.
[[nodiscard]] Histogram average_histograms(std::span<const Histogram> histograms);

}  // namespace lpbench
