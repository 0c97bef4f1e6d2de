#include "lpbench/predictors.hpp"
#include "lpbench/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lpbench {

std::string_view measure_name(Measure m) noexcept {
    switch (m) {
        case Measure::CN: return "CN";
        case Measure::AA: return "AA";
        case Measure::RA: return "RA";
        case Measure::SAI: return "SAI";
        case Measure::JI: return "JI";
        case Measure::SPI: return "SPI";
        case Measure::HPI: return "HPI";
        case Measure::HDI: return "HDI";
        case Measure::LHN: return "LHN";
        case Measure::PA: return "PA";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) noexcept {
    for (Measure m : kAllMeasures) {
        if (measure_name(m) == name) return m;
    }
    return std::nullopt;
}

double score_from_features(Measure m, const PairFeatures& f) noexcept {
    const double ki = f.degree_i;
    const double kj = f.degree_j;
    const double cn = f.common;
    if (m == Measure::PA) return ki * kj;
    if (f.common == 0) return 0.0;
    switch (m) {
        case Measure::CN: return cn;
        case Measure::AA: return f.adamic_adar;
        case Measure::RA: return f.resource_allocation;
        case Measure::SAI: return cn / std::sqrt(ki * kj);
        case Measure::JI: return cn / (ki + kj - cn);
        case Measure::SPI: return 2.0 * cn / (ki + kj);
        case Measure::HPI: return cn / std::min(ki, kj);
        case Measure::HDI: return cn / std::max(ki, kj);
        case Measure::LHN: return cn / (ki * kj);
        case Measure::PA: break;
    }
    return 0.0;
}

PairScorer::PairScorer(const Graph& train)
    : train_(train), common_(train.max_degree()), inv_log_(std::size_t{train.max_degree()} + 1, 0.0) {
    for (std::size_t k = 2; k < inv_log_.size(); ++k) inv_log_[k] = 1.0 / std::log(static_cast<double>(k));
}

PairFeatures PairScorer::features(NodeId i, NodeId j) {
    PairFeatures f;
    f.degree_i = train_.degree(i);
    f.degree_j = train_.degree(j);
    const std::size_t n = intersect_collect(train_.neighbors(i), train_.neighbors(j), common_.data());
    f.common = static_cast<std::uint32_t>(n);
    // Sum in ascending degree order so the result does not depend on node
    // labels: exact ties stay ties after relabeling.
    for (std::size_t c = 0; c < n; ++c) common_[c] = train_.degree(common_[c]);
    std::sort(common_.begin(), common_.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t k = common_[c];
        // A common neighbor is adjacent to both i and j, so ln k >= ln 2.
        assert(k >= 2);
        f.adamic_adar += inv_log_[k];
        f.resource_allocation += 1.0 / k;
    }
    return f;
}

double score(Measure m, const Graph& train, NodeId i, NodeId j) {
    train.check_node(i);
    train.check_node(j);
    if (i == j) throw std::invalid_argument("score: i and j must differ");
    PairScorer scorer(train);
    return scorer.score(m, i, j);
}

std::vector<ScoredPair> score_candidates(Measure m, const Graph& train, std::span<const NodePair> candidates) {
    PairScorer scorer(train);
    std::vector<ScoredPair> out;
    out.reserve(candidates.size());
    for (const NodePair& p : candidates) {
        train.check_node(p.v);
        if (p.u == p.v) throw std::invalid_argument("score_candidates: degenerate pair");
        if (train.has_edge(p.u, p.v)) {
            throw std::invalid_argument("score_candidates: (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                        ") is a training edge");
        }
        out.push_back({p.u, p.v, scorer.score(m, p.u, p.v)});
    }
    std::sort(out.begin(), out.end(), ranks_before);
    return out;
}

NonEdgeCursor::NonEdgeCursor(const Graph& train, bool cn_positive_only)
    : train_(train), cn_positive_only_(cn_positive_only) {
    if (cn_positive_only_) mark_.assign(train.node_count(), 0);
    col_ = 1;
    load_row();
}

void NonEdgeCursor::load_row() {
    row_pos_ = 0;
    row_items_.clear();
    if (!cn_positive_only_ || row_ >= train_.node_count()) return;
    // Stamp row_ + 1 marks nodes already collected or adjacent to row_.
    const std::uint32_t stamp = row_ + 1;
    for (NodeId x : train_.neighbors(row_)) mark_[x] = stamp;
    for (NodeId x : train_.neighbors(row_)) {
        for (NodeId y : train_.neighbors(x)) {
            if (y > row_ && mark_[y] != stamp) {
                mark_[y] = stamp;
                row_items_.push_back(y);
            }
        }
    }
    std::sort(row_items_.begin(), row_items_.end());
}

bool NonEdgeCursor::next(NodePair& out) {
    const auto n = static_cast<NodeId>(train_.node_count());
    while (row_ < n) {
        if (cn_positive_only_) {
            if (row_pos_ < row_items_.size()) {
                out = NodePair(row_, row_items_[row_pos_++]);
                return true;
            }
        } else {
            // Neighbors of row_ are sorted; skip them while scanning columns.
            const auto nbrs = train_.neighbors(row_);
            while (col_ < n) {
                while (row_pos_ < nbrs.size() && nbrs[row_pos_] < col_) ++row_pos_;
                const NodeId j = col_++;
                if (row_pos_ < nbrs.size() && nbrs[row_pos_] == j) continue;
                out = NodePair(row_, j);
                return true;
            }
        }
        ++row_;
        col_ = row_ + 1;
        load_row();
    }
    return false;
}

std::vector<NodePair> enumerate_non_edges(const Graph& train, bool cn_positive_only) {
    std::vector<NodePair> out;
    NonEdgeCursor cursor(train, cn_positive_only);
    for (NodePair p; cursor.next(p);) out.push_back(p);
    return out;
}

}  // namespace lpbench
