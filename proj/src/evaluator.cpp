#include "lpbench/evaluator.hpp"
#include "lpbench/intersect.hpp"
#include "lpbench/rng.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>

namespace lpbench {

namespace {

class ProbeLookup {
public:
    explicit ProbeLookup(std::span<const Edge> probe) : edges_(probe.begin(), probe.end()) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
    [[nodiscard]] bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

private:
    std::vector<Edge> edges_;
};

void check_split(const Graph& train, std::span<const Edge> probe) {
    if (probe.empty()) throw EvaluationError("probe set is empty");
    for (const Edge& e : probe) {
        if (e.u == e.v || e.v >= train.node_count()) {
            throw EvaluationError(fmt::format("probe edge ({}, {}) is not a pair of training-graph nodes", e.u, e.v));
        }
    }
}

void check_nonexistent_exists(const Graph& train, const ProbeLookup& probe) {
    const std::uint64_t n = train.node_count();
    const std::uint64_t pairs = n * (n - 1) / 2;
    if (pairs <= train.edge_count() + probe.size()) {
        throw EvaluationError("no nonexistent pairs: the full graph is complete");
    }
}

// Bounded selection of the best L pairs under ranks_before.
class TopList {
public:
    explicit TopList(std::size_t capacity) : capacity_(capacity) { heap_.reserve(capacity); }

    void offer(const ScoredPair& p) {
        if (heap_.size() < capacity_) {
            heap_.push_back(p);
            std::push_heap(heap_.begin(), heap_.end(), ranks_before);
        } else if (ranks_before(p, heap_.front())) {
            std::pop_heap(heap_.begin(), heap_.end(), ranks_before);
            heap_.back() = p;
            std::push_heap(heap_.begin(), heap_.end(), ranks_before);
        }
    }
    [[nodiscard]] bool full() const noexcept { return heap_.size() >= capacity_; }
    [[nodiscard]] const std::vector<ScoredPair>& items() const noexcept { return heap_; }

private:
    std::size_t capacity_;
    std::vector<ScoredPair> heap_;
};

}  // namespace

std::vector<double> auc_sampled_multi(std::span<const Measure> measures, const Graph& train,
                                      std::span<const Edge> probe, std::uint64_t n, std::uint64_t seed) {
    check_split(train, probe);
    if (n == 0) throw EvaluationError("AUC needs at least one comparison");
    const ProbeLookup lookup(probe);
    check_nonexistent_exists(train, lookup);

    PairScorer scorer(train);
    Rng rng(seed);
    const std::uint64_t nodes = train.node_count();
    std::vector<std::uint64_t> wins(measures.size(), 0);
    std::vector<std::uint64_t> ties(measures.size(), 0);
    // Per draw: probe index first, then (a, b) pairs until one is nonexistent.
    for (std::uint64_t t = 0; t < n; ++t) {
        const Edge missing = probe[rng.below(probe.size())];
        Edge absent;
        while (true) {
            const auto a = static_cast<NodeId>(rng.below(nodes));
            const auto b = static_cast<NodeId>(rng.below(nodes));
            if (a == b) continue;
            absent = Edge(a, b);
            if (!train.has_edge(a, b) && !lookup.contains(absent)) break;
        }
        const PairFeatures fp = scorer.features(missing.u, missing.v);
        const PairFeatures fn = scorer.features(absent.u, absent.v);
        for (std::size_t k = 0; k < measures.size(); ++k) {
            const double sp = score_from_features(measures[k], fp);
            const double sn = score_from_features(measures[k], fn);
            if (sp > sn) {
                ++wins[k];
            } else if (sp == sn) {
                ++ties[k];
            }
        }
    }
    std::vector<double> auc(measures.size());
    for (std::size_t k = 0; k < measures.size(); ++k) {
        auc[k] = (static_cast<double>(wins[k]) + 0.5 * static_cast<double>(ties[k])) / static_cast<double>(n);
    }
    return auc;
}

double auc_sampled(Measure m, const Graph& train, std::span<const Edge> probe, std::uint64_t n, std::uint64_t seed) {
    const Measure one[] = {m};
    return auc_sampled_multi(one, train, probe, n, seed).front();
}

double auc_exact(Measure m, const Graph& train, std::span<const Edge> probe) {
    check_split(train, probe);
    const ProbeLookup lookup(probe);
    check_nonexistent_exists(train, lookup);

    PairScorer scorer(train);
    std::vector<double> absent_scores;
    NonEdgeCursor cursor(train, false);
    for (NodePair p; cursor.next(p);) {
        if (!lookup.contains(p)) absent_scores.push_back(scorer.score(m, p.u, p.v));
    }
    std::sort(absent_scores.begin(), absent_scores.end());

    std::uint64_t wins = 0;
    std::uint64_t ties = 0;
    for (const Edge& e : probe) {
        const double s = scorer.score(m, e.u, e.v);
        const auto lo = std::lower_bound(absent_scores.begin(), absent_scores.end(), s);
        const auto hi = std::upper_bound(lo, absent_scores.end(), s);
        wins += static_cast<std::uint64_t>(lo - absent_scores.begin());
        ties += static_cast<std::uint64_t>(hi - lo);
    }
    const double total = static_cast<double>(probe.size()) * static_cast<double>(absent_scores.size());
    return (static_cast<double>(wins) + 0.5 * static_cast<double>(ties)) / total;
}

std::vector<double> precision_multi(std::span<const Measure> measures, const Graph& train,
                                    std::span<const Edge> probe) {
    check_split(train, probe);
    const ProbeLookup lookup(probe);
    const std::size_t limit = probe.size();

    std::vector<TopList> tops;
    tops.reserve(measures.size());
    for (std::size_t k = 0; k < measures.size(); ++k) tops.emplace_back(limit);

    bool any_pa = false;
    bool any_cn_family = false;
    for (Measure m : measures) (needs_common_neighbor(m) ? any_cn_family : any_pa) = true;

    PairScorer scorer(train);
    if (any_cn_family) {
        // Pairs without a common neighbor score 0 on these measures; they only
        // enter as padding below.
        NonEdgeCursor cursor(train, true);
        for (NodePair p; cursor.next(p);) {
            const PairFeatures f = scorer.features(p.u, p.v);
            for (std::size_t k = 0; k < measures.size(); ++k) {
                if (needs_common_neighbor(measures[k])) tops[k].offer({p.u, p.v, score_from_features(measures[k], f)});
            }
        }
    }
    if (any_pa) {
        NonEdgeCursor cursor(train, false);
        for (NodePair p; cursor.next(p);) {
            const double s = static_cast<double>(train.degree(p.u)) * static_cast<double>(train.degree(p.v));
            for (std::size_t k = 0; k < measures.size(); ++k) {
                if (!needs_common_neighbor(measures[k])) tops[k].offer({p.u, p.v, s});
            }
        }
    }

    std::vector<double> out(measures.size());
    std::vector<ScoredPair> padding;
    bool padding_ready = false;
    for (std::size_t k = 0; k < measures.size(); ++k) {
        std::size_t hits = 0;
        for (const ScoredPair& p : tops[k].items()) hits += lookup.contains(Edge(p.i, p.j)) ? 1 : 0;
        if (!tops[k].full()) {
            // Zero-score pairs rank after every positive one, in canonical order.
            if (!padding_ready) {
                NonEdgeCursor cursor(train, false);
                for (NodePair p; padding.size() < limit && cursor.next(p);) {
                    if (intersect_count(train.neighbors(p.u), train.neighbors(p.v)) == 0) padding.push_back({p.u, p.v, 0.0});
                }
                padding_ready = true;
            }
            const std::size_t need = limit - tops[k].items().size();
            for (std::size_t c = 0; c < need && c < padding.size(); ++c) {
                hits += lookup.contains(Edge(padding[c].i, padding[c].j)) ? 1 : 0;
            }
        }
        out[k] = static_cast<double>(hits) / static_cast<double>(limit);
    }
    return out;
}

double precision(Measure m, const Graph& train, std::span<const Edge> probe) {
    const Measure one[] = {m};
    return precision_multi(one, train, probe).front();
}

std::string_view edge_property_name(EdgeProperty kind) noexcept {
    return kind == EdgeProperty::Popularity ? "e_pub" : "e_CN";
}

std::size_t Binning::bin_of(std::uint64_t value) const noexcept {
    if (kind == EdgeProperty::CommonNeighbors) return static_cast<std::size_t>(value);
    return static_cast<std::size_t>(std::bit_width(value));
}

std::uint64_t Binning::lower(std::size_t bin) const noexcept {
    if (kind == EdgeProperty::CommonNeighbors || bin == 0) return bin;
    return std::uint64_t{1} << (bin - 1);
}

std::uint64_t Binning::upper(std::size_t bin) const noexcept {
    if (kind == EdgeProperty::CommonNeighbors || bin == 0) return bin + 1;
    return std::uint64_t{1} << bin;
}

Binning binning_for(const Graph& g, EdgeProperty kind) {
    const std::uint64_t kmax = g.max_degree();
    Binning b{kind, 1};
    if (kmax == 0) return b;
    const std::uint64_t largest = kind == EdgeProperty::Popularity ? (kmax - 1) * (kmax - 1) : kmax - 1;
    b.bin_count = b.bin_of(largest) + 1;
    return b;
}

Histogram probe_distribution(const Graph& full, std::span<const Edge> probe, EdgeProperty kind,
                             const Graph* degree_source) {
    if (probe.empty()) throw EvaluationError("probe set is empty");
    const Graph& source = degree_source != nullptr ? *degree_source : full;
    if (source.node_count() != full.node_count()) {
        throw EvaluationError("degree source and full graph have different node sets");
    }
    Histogram h;
    h.binning = binning_for(full, kind);
    h.mass.assign(h.binning.bin_count, 0.0);
    std::vector<std::uint64_t> counts(h.binning.bin_count, 0);
    for (const Edge& e : probe) {
        const std::uint64_t value = kind == EdgeProperty::Popularity ? edge_popularity(source, e.u, e.v)
                                                                     : common_neighbors_count(source, e.u, e.v);
        const std::size_t bin = h.binning.bin_of(value);
        if (bin >= counts.size()) throw EvaluationError("degree source is not a subgraph of the full graph");
        ++counts[bin];
    }
    for (std::size_t b = 0; b < counts.size(); ++b) {
        h.mass[b] = static_cast<double>(counts[b]) / static_cast<double>(probe.size());
    }
    return h;
}

Histogram average_histograms(std::span<const Histogram> histograms) {
    if (histograms.empty()) throw EvaluationError("cannot average zero histograms");
    Histogram out;
    out.binning = histograms.front().binning;
    out.mass.assign(out.binning.bin_count, 0.0);
    for (const Histogram& h : histograms) {
        if (h.binning != out.binning || h.mass.size() != out.mass.size()) {
            throw EvaluationError("histogram binning mismatch");
        }
        for (std::size_t b = 0; b < h.mass.size(); ++b) out.mass[b] += h.mass[b];
    }
    for (double& m : out.mass) m /= static_cast<double>(histograms.size());
    out.rep_count = histograms.size();
    return out;
}

}  // namespace lpbench
