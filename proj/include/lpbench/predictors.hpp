#pragma once

// Local similarity indices for link prediction.
//
// All ten measures are functions of the two endpoint degrees and the set of
// common neighbors in the training graph. Ratio measures score 0 whenever the
// pair has no common neighbor; PA = k_i * k_j always. AA uses the natural log.

#include "lpbench/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lpbench {

enum class Measure : std::uint8_t { CN, AA, RA, SAI, JI, SPI, HPI, HDI, LHN, PA };

inline constexpr std::array<Measure, 10> kAllMeasures{Measure::CN,  Measure::AA,  Measure::RA,  Measure::SAI,
                                                      Measure::JI,  Measure::SPI, Measure::HPI, Measure::HDI,
                                                      Measure::LHN, Measure::PA};

[[nodiscard]] std::string_view measure_name(Measure m) noexcept;
[[nodiscard]] std::optional<Measure> parse_measure(std::string_view name) noexcept;

/// True for every measure that is zero when the pair has no common neighbor.
[[nodiscard]] constexpr bool needs_common_neighbor(Measure m) noexcept { return m != Measure::PA; }

/// Everything the ten measures read about a pair.
struct PairFeatures {
    std::uint32_t degree_i = 0;
    std::uint32_t degree_j = 0;
    std::uint32_t common = 0;
    double adamic_adar = 0.0;         // Σ 1 / ln k_q
    double resource_allocation = 0.0;  // Σ 1 / k_q
};

[[nodiscard]] double score_from_features(Measure m, const PairFeatures& f) noexcept;

struct ScoredPair {
    NodeId i = 0;
    NodeId j = 0;
    double score = 0.0;
};

/// Scores pairs against one training graph; keeps a scratch buffer, so one
/// instance per thread.
class PairScorer {
public:
    explicit PairScorer(const Graph& train);

    /// AA and RA sum common-neighbor terms in ascending degree order.
    [[nodiscard]] PairFeatures features(NodeId i, NodeId j);
    [[nodiscard]] double score(Measure m, NodeId i, NodeId j) { return score_from_features(m, features(i, j)); }
    [[nodiscard]] const Graph& graph() const noexcept { return train_; }

private:
    const Graph& train_;
    std::vector<NodeId> common_;
    std::vector<double> inv_log_;  // 1 / ln k, indexed by degree
};

/// s_m(i, j) on the training graph. Throws GraphError for unknown nodes and
/// std::invalid_argument for i == j.
[[nodiscard]] double score(Measure m, const Graph& train, NodeId i, NodeId j);

/// Strict ranking order: higher score first, then canonical (i, j).
[[nodiscard]] constexpr bool ranks_before(const ScoredPair& a, const ScoredPair& b) noexcept {
    if (a.score != b.score) return a.score > b.score;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

/// Scores and ranks candidate pairs, none of which may be a training edge.
[[nodiscard]] std::vector<ScoredPair> score_candidates(Measure m, const Graph& train,
                                                      std::span<const NodePair> candidates);

/// Walks node pairs absent from the training graph in canonical order.
/// With `cn_positive_only`, pairs without a common neighbor are skipped.
class NonEdgeCursor {
public:
    NonEdgeCursor(const Graph& train, bool cn_positive_only);

    /// Next pair, or false when exhausted.
    bool next(NodePair& out);

private:
    void load_row();

    const Graph& train_;
    bool cn_positive_only_;
    NodeId row_ = 0;
    NodeId col_ = 0;
    std::size_t row_pos_ = 0;
    std::vector<NodeId> row_items_;
    std::vector<std::uint32_t> mark_;
};

/// Materializes NonEdgeCursor.
[[nodiscard]] std::vector<NodePair> enumerate_non_edges(const Graph& train, bool cn_positive_only);

}  // namespace lpbench
