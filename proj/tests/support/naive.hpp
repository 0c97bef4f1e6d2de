#pragma once

// Brute-force reference implementations used as test oracles. Deliberately
// slow and written against std::set so they share no code with the library.

#include "lpbench/graph.hpp"
#include "lpbench/predictors.hpp"
#include "lpbench/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

using lpbench::Edge;
using lpbench::Measure;
using lpbench::NodeId;

struct Graph {
    std::vector<std::set<NodeId>> adj;

    explicit Graph(std::size_t n) : adj(n) {}
    Graph(std::size_t n, const std::vector<Edge>& edges) : adj(n) {
        for (const Edge& e : edges) add(e.u, e.v);
    }
    void add(NodeId a, NodeId b) {
        if (a == b) return;
        adj[a].insert(b);
        adj[b].insert(a);
    }
    [[nodiscard]] bool has(NodeId a, NodeId b) const { return adj[a].count(b) > 0; }
    [[nodiscard]] std::uint64_t k(NodeId a) const { return adj[a].size(); }
    [[nodiscard]] std::size_t n() const { return adj.size(); }
    [[nodiscard]] std::vector<NodeId> common(NodeId a, NodeId b) const {
        std::vector<NodeId> out;
        for (NodeId q : adj[a])
            if (adj[b].count(q)) out.push_back(q);
        return out;
    }
};

/// p / q with integer parts, for exact comparisons.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// The measures whose value is a ratio of integers.
inline bool is_rational(Measure m) {
    return m == Measure::CN || m == Measure::JI || m == Measure::SPI || m == Measure::HPI || m == Measure::HDI ||
           m == Measure::LHN || m == Measure::PA;
}

inline Ratio rational_score(Measure m, const Graph& g, NodeId i, NodeId j) {
    const std::uint64_t cn = g.common(i, j).size();
    const std::uint64_t ki = g.k(i);
    const std::uint64_t kj = g.k(j);
    if (m == Measure::PA) return {ki * kj, 1};
    if (cn == 0) return {0, 1};
    std::set<NodeId> uni(g.adj[i]);
    uni.insert(g.adj[j].begin(), g.adj[j].end());
    switch (m) {
        case Measure::CN: return {cn, 1};
        case Measure::JI: return {cn, uni.size()};
        case Measure::SPI: return {2 * cn, ki + kj};
        case Measure::HPI: return {cn, std::min(ki, kj)};
        case Measure::HDI: return {cn, std::max(ki, kj)};
        case Measure::LHN: return {cn, ki * kj};
        default: return {0, 1};
    }
}

inline double score(Measure m, const Graph& g, NodeId i, NodeId j) {
    if (is_rational(m)) return rational_score(m, g, i, j).value();
    const auto common = g.common(i, j);
    if (common.empty()) return 0.0;
    // Terms are added in ascending degree order, the library's documented order.
    std::vector<std::uint64_t> degrees;
    for (NodeId q : common) degrees.push_back(g.k(q));
    std::sort(degrees.begin(), degrees.end());
    double s = 0.0;
    switch (m) {
        case Measure::AA:
            for (auto k : degrees) s += 1.0 / std::log(static_cast<double>(k));
            return s;
        case Measure::RA:
            for (auto k : degrees) s += 1.0 / static_cast<double>(k);
            return s;
        case Measure::SAI:
            return static_cast<double>(common.size()) / std::sqrt(static_cast<double>(g.k(i) * g.k(j)));
        default: return 0.0;
    }
}

/// All node pairs that are neither training nor probe edges.
inline std::vector<Edge> nonexistent_pairs(const Graph& train, const std::vector<Edge>& probe) {
    const std::set<Edge> probe_set(probe.begin(), probe.end());
    std::vector<Edge> out;
    for (NodeId i = 0; i < train.n(); ++i)
        for (NodeId j = i + 1; j < train.n(); ++j)
            if (!train.has(i, j) && !probe_set.count(Edge(i, j))) out.emplace_back(i, j);
    return out;
}

/// Every (probe, nonexistent) comparison, ties counted half.
inline double auc_exact(Measure m, const Graph& train, const std::vector<Edge>& probe) {
    const auto absent = nonexistent_pairs(train, probe);
    double hits = 0.0;
    for (const Edge& p : probe) {
        const double sp = score(m, train, p.u, p.v);
        for (const Edge& a : absent) {
            const double sa = score(m, train, a.u, a.v);
            hits += sp > sa ? 1.0 : (sp == sa ? 0.5 : 0.0);
        }
    }
    return hits / (static_cast<double>(probe.size()) * static_cast<double>(absent.size()));
}

/// Top-|probe| non-training pairs by (score desc, i asc, j asc).
inline double precision(Measure m, const Graph& train, const std::vector<Edge>& probe) {
    struct Item {
        double s;
        Edge e;
    };
    std::vector<Item> items;
    for (NodeId i = 0; i < train.n(); ++i)
        for (NodeId j = i + 1; j < train.n(); ++j)
            if (!train.has(i, j)) items.push_back({score(m, train, i, j), Edge(i, j)});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.s > b.s; });
    const std::set<Edge> probe_set(probe.begin(), probe.end());
    std::size_t hits = 0;
    for (std::size_t r = 0; r < probe.size() && r < items.size(); ++r) hits += probe_set.count(items[r].e);
    return static_cast<double>(hits) / static_cast<double>(probe.size());
}

/// Each pair present independently with probability p.
inline std::vector<Edge> random_edges(std::size_t n, double p, lpbench::Rng& rng) {
    std::vector<Edge> out;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) out.emplace_back(i, j);
    return out;
}

/// Local clustering average by direct triangle counting.
inline double clustering(const Graph& g) {
    double total = 0.0;
    for (NodeId i = 0; i < g.n(); ++i) {
        const auto k = g.k(i);
        if (k < 2) continue;
        std::uint64_t links = 0;
        for (NodeId a : g.adj[i])
            for (NodeId b : g.adj[i])
                if (a < b && g.has(a, b)) ++links;
        total += 2.0 * static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return total / static_cast<double>(g.n());
}

}  // namespace naive
