#include "lpbench/samplers.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace lpbench {

std::string_view sampler_name(SamplerMethod method) noexcept {
    switch (method) {
        case SamplerMethod::BFS: return "BFS";
        case SamplerMethod::MHRW: return "MHRW";
        case SamplerMethod::FS: return "FS";
        case SamplerMethod::FF: return "FF";
        case SamplerMethod::PR: return "PR";
    }
    return "?";
}

std::optional<SamplerMethod> parse_sampler(std::string_view name) noexcept {
    for (SamplerMethod m : kAllSamplers) {
        if (sampler_name(m) == name) return m;
    }
    return std::nullopt;
}

std::string SamplerSpec::canonical_params() const {
    switch (method) {
        case SamplerMethod::FS: return fmt::format("sf={};m={}", sample_fraction, walkers);
        case SamplerMethod::FF: return fmt::format("sf={};pf={}", sample_fraction, burn_probability);
        default: return fmt::format("sf={}", sample_fraction);
    }
}

std::size_t target_train_size(double sample_fraction, std::size_t edge_count) {
    const double exact = sample_fraction * static_cast<double>(edge_count);
    const double slack = 1e-9 * std::max(1.0, static_cast<double>(edge_count));
    return static_cast<std::size_t>(std::ceil(exact - slack));
}

std::uint64_t draw_burn_count(Rng& rng, double burn_probability) {
    return rng.geometric_failures(burn_probability);
}

namespace {

class TrainingSet {
public:
    TrainingSet(const Graph& g, double sample_fraction) : graph_(g), in_train_(g.edge_count(), 0) {
        if (!(sample_fraction > 0.0 && sample_fraction <= 1.0)) {
            throw SamplerParameterError(fmt::format("sample fraction {} outside (0, 1]", sample_fraction));
        }
        target_ = target_train_size(sample_fraction, g.edge_count());
        if (target_ == 0) {
            throw SamplerParameterError(fmt::format("s_f * |E| = {} * {} < 1: empty training set", sample_fraction,
                                                    g.edge_count()));
        }
    }

    /// Adds the edge if new; returns true once the target is reached.
    bool add(EdgeId id) noexcept {
        if (!in_train_[id]) {
            in_train_[id] = 1;
            ++size_;
        }
        return done();
    }
    [[nodiscard]] bool done() const noexcept { return size_ >= target_; }
    [[nodiscard]] std::size_t target() const noexcept { return target_; }
    [[nodiscard]] std::uint64_t step_budget() const noexcept { return kStepBudgetPerEdge * target_; }

    [[nodiscard]] Partition finish() const {
        Partition p;
        p.train.reserve(size_);
        p.probe.reserve(graph_.edge_count() - size_);
        const auto edges = graph_.edges();
        for (EdgeId id = 0; id < edges.size(); ++id) (in_train_[id] ? p.train : p.probe).push_back(edges[id]);
        return p;
    }

private:
    const Graph& graph_;
    std::vector<char> in_train_;
    std::size_t target_ = 0;
    std::size_t size_ = 0;
};

void require_connected(const Graph& g, std::string_view method) {
    if (!is_connected(g)) {
        throw SamplerParameterError(fmt::format("{} requires a connected graph (run on the giant component)", method));
    }
}

void count_visit(SamplerTrace* trace, NodeId node) {
    if (trace != nullptr && !trace->visits.empty()) ++trace->visits[node];
}

// Walk helpers pick the neighbor slot so the traversed edge id comes for free.
struct Step {
    NodeId to;
    EdgeId edge;
};

Step random_step(const Graph& g, NodeId from, Rng& rng) {
    const auto slot = static_cast<std::size_t>(rng.below(g.degree(from)));
    return {g.neighbors(from)[slot], g.slot_edge(from, slot)};
}

// Fenwick tree over walker degrees for degree-proportional walker choice.
class WeightTree {
public:
    explicit WeightTree(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t index, std::int64_t delta) noexcept {
        for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }
    [[nodiscard]] std::int64_t total() const noexcept {
        std::int64_t sum = 0;
        for (std::size_t i = tree_.size() - 1; i > 0; i -= i & (~i + 1)) sum += tree_[i];
        return sum;
    }
    /// Smallest index whose prefix sum exceeds `r` (0 <= r < total).
    [[nodiscard]] std::size_t find(std::int64_t r) const noexcept {
        std::size_t pos = 0;
        std::size_t mask = 1;
        while (mask * 2 < tree_.size()) mask *= 2;
        for (; mask != 0; mask /= 2) {
            const std::size_t next = pos + mask;
            if (next < tree_.size() && tree_[next] <= r) {
                pos = next;
                r -= tree_[next];
            }
        }
        return pos;
    }

private:
    std::vector<std::int64_t> tree_;
};

// Unordered set of node ids with O(1) removal and uniform draws.
class NodePool {
public:
    explicit NodePool(std::size_t n) : items_(n), where_(n) {
        std::iota(items_.begin(), items_.end(), NodeId{0});
        std::iota(where_.begin(), where_.end(), std::size_t{0});
    }
    [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
    NodeId draw(Rng& rng) const noexcept { return items_[rng.below(items_.size())]; }
    void remove(NodeId x) noexcept {
        const std::size_t at = where_[x];
        const NodeId last = items_.back();
        items_[at] = last;
        where_[last] = at;
        items_.pop_back();
    }

private:
    std::vector<NodeId> items_;
    std::vector<std::size_t> where_;
};

Partition bfs_from(const Graph& g, TrainingSet& train, NodeId start, SamplerTrace* trace) {
    std::vector<char> seen(g.node_count(), 0);
    std::deque<NodeId> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        const NodeId i = queue.front();
        queue.pop_front();
        if (trace != nullptr) ++trace->steps;
        const auto nbrs = g.neighbors(i);
        for (std::size_t slot = 0; slot < nbrs.size(); ++slot) {
            if (train.add(g.slot_edge(i, slot))) return train.finish();
            const NodeId j = nbrs[slot];
            if (!seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
        }
    }
    throw SamplerError(fmt::format("BFS exhausted the start component before reaching {} edges: graph disconnected",
                                   train.target()));
}

}  // namespace

Partition sample_bfs(const Graph& g, double sample_fraction, std::uint64_t seed, SamplerTrace* trace) {
    TrainingSet train(g, sample_fraction);
    Rng rng(seed);
    const auto start = static_cast<NodeId>(rng.below(g.node_count()));
    return bfs_from(g, train, start, trace);
}

Partition sample_bfs_from(const Graph& g, double sample_fraction, NodeId start) {
    g.check_node(start);
    TrainingSet train(g, sample_fraction);
    return bfs_from(g, train, start, nullptr);
}

Partition sample_mhrw(const Graph& g, double sample_fraction, std::uint64_t seed, SamplerTrace* trace) {
    TrainingSet train(g, sample_fraction);
    require_connected(g, "MHRW");
    Rng rng(seed);
    auto current = static_cast<NodeId>(rng.below(g.node_count()));
    const std::uint64_t budget = train.step_budget();
    std::uint64_t steps = 0;
    while (!train.done()) {
        if (steps++ >= budget) {
            throw SamplerBudgetError(fmt::format("MHRW exceeded {} steps for {} edges", budget, train.target()));
        }
        const Step step = random_step(g, current, rng);
        const double u = rng.uniform01();
        // Accept with probability min(1, k_i / k_j).
        if (u * g.degree(step.to) <= static_cast<double>(g.degree(current))) {
            train.add(step.edge);
            current = step.to;
        }
        count_visit(trace, current);
    }
    if (trace != nullptr) trace->steps = steps;
    return train.finish();
}

Partition sample_fs(const Graph& g, double sample_fraction, std::uint32_t walkers, std::uint64_t seed,
                    SamplerTrace* trace) {
    TrainingSet train(g, sample_fraction);
    if (walkers == 0 || walkers > g.node_count()) {
        throw SamplerParameterError(
            fmt::format("FS needs 1 <= m <= |V| (m = {}, |V| = {})", walkers, g.node_count()));
    }
    require_connected(g, "FS");
    Rng rng(seed);

    // m distinct seeds: partial Fisher-Yates over node ids.
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), NodeId{0});
    std::vector<NodeId> frontier(walkers);
    WeightTree weights(walkers);
    for (std::uint32_t w = 0; w < walkers; ++w) {
        const auto pick = w + static_cast<std::size_t>(rng.below(ids.size() - w));
        std::swap(ids[w], ids[pick]);
        frontier[w] = ids[w];
        weights.add(w, g.degree(frontier[w]));
    }

    const std::uint64_t budget = train.step_budget();
    std::uint64_t steps = 0;
    std::int64_t total = weights.total();
    while (!train.done()) {
        if (steps++ >= budget) {
            throw SamplerBudgetError(fmt::format("FS exceeded {} steps for {} edges", budget, train.target()));
        }
        const std::size_t w = weights.find(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total))));
        const NodeId from = frontier[w];
        const Step step = random_step(g, from, rng);
        train.add(step.edge);
        const std::int64_t delta = static_cast<std::int64_t>(g.degree(step.to)) - g.degree(from);
        weights.add(w, delta);
        total += delta;
        frontier[w] = step.to;
        count_visit(trace, step.to);
    }
    if (trace != nullptr) trace->steps = steps;
    return train.finish();
}

Partition sample_ff(const Graph& g, double sample_fraction, double burn_probability, std::uint64_t seed,
                    SamplerTrace* trace) {
    TrainingSet train(g, sample_fraction);
    if (!(burn_probability > 0.0 && burn_probability < 1.0)) {
        throw SamplerParameterError(fmt::format("FF burn probability {} outside (0, 1)", burn_probability));
    }
    Rng rng(seed);
    NodePool unburned(g.node_count());
    std::vector<char> burned(g.node_count(), 0);
    std::vector<char> queued(g.node_count(), 0);
    std::deque<NodeId> queue;
    std::vector<NodeId> candidates;
    bool ignited = false;

    while (true) {
        if (queue.empty()) {
            if (unburned.empty()) break;
            if (ignited && trace != nullptr) ++trace->restarts;
            ignited = true;
            const NodeId seed_node = unburned.draw(rng);
            queued[seed_node] = 1;
            queue.push_back(seed_node);
        }
        const NodeId i = queue.front();
        queue.pop_front();
        burned[i] = 1;
        unburned.remove(i);
        if (trace != nullptr) ++trace->steps;

        const auto nbrs = g.neighbors(i);
        for (std::size_t slot = 0; slot < nbrs.size(); ++slot) {
            if (train.add(g.slot_edge(i, slot))) return train.finish();
        }

        const std::uint64_t spread = draw_burn_count(rng, burn_probability);
        candidates.clear();
        for (NodeId j : nbrs)
            if (!burned[j] && !queued[j]) candidates.push_back(j);
        const std::size_t take = std::min<std::uint64_t>(spread, candidates.size());
        for (std::size_t c = 0; c < take; ++c) {
            const auto pick = c + static_cast<std::size_t>(rng.below(candidates.size() - c));
            std::swap(candidates[c], candidates[pick]);
            queued[candidates[c]] = 1;
            queue.push_back(candidates[c]);
        }
    }
    // Every node burned means every edge was added, so the target was met.
    return train.finish();
}

Partition sample_pr(const Graph& g, double sample_fraction, std::uint64_t seed) {
    TrainingSet train(g, sample_fraction);
    Rng rng(seed);
    std::vector<EdgeId> ids(g.edge_count());
    std::iota(ids.begin(), ids.end(), EdgeId{0});
    for (std::size_t c = 0; !train.done(); ++c) {
        const auto pick = c + static_cast<std::size_t>(rng.below(ids.size() - c));
        std::swap(ids[c], ids[pick]);
        train.add(ids[c]);
    }
    return train.finish();
}

Partition sample(const Graph& g, const SamplerSpec& spec, SamplerTrace* trace) {
    switch (spec.method) {
        case SamplerMethod::BFS: return sample_bfs(g, spec.sample_fraction, spec.seed, trace);
        case SamplerMethod::MHRW: return sample_mhrw(g, spec.sample_fraction, spec.seed, trace);
        case SamplerMethod::FS: return sample_fs(g, spec.sample_fraction, spec.walkers, spec.seed, trace);
        case SamplerMethod::FF: return sample_ff(g, spec.sample_fraction, spec.burn_probability, spec.seed, trace);
        case SamplerMethod::PR: return sample_pr(g, spec.sample_fraction, spec.seed);
    }
    throw SamplerParameterError("unknown sampler");
}

std::vector<std::uint64_t> simple_walk_visits(const Graph& g, std::uint64_t steps, std::uint64_t seed) {
    require_connected(g, "random walk");
    Rng rng(seed);
    std::vector<std::uint64_t> visits(g.node_count(), 0);
    auto current = static_cast<NodeId>(rng.below(g.node_count()));
    for (std::uint64_t s = 0; s < steps; ++s) {
        current = random_step(g, current, rng).to;
        ++visits[current];
    }
    return visits;
}

}  // namespace lpbench
