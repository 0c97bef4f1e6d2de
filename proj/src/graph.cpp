#include "lpbench/graph.hpp"
#include "lpbench/intersect.hpp"

#include <algorithm>
#include <queue>

namespace lpbench {

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.v >= node_count) throw GraphError("edge endpoint " + std::to_string(e.v) + " out of range");
        if (e.u != e.v) edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    offsets_.assign(node_count + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];

    adjacency_.resize(2 * edges_.size());
    slot_edge_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v), so filling in edge order leaves every
    // neighbor list sorted: node x first receives its smaller neighbors (from
    // edges (w, x), ascending w) and then its larger ones (edges (x, w)).
    for (std::size_t pass = 0; pass < 2; ++pass) {
        for (EdgeId id = 0; id < edges_.size(); ++id) {
            const Edge& e = edges_[id];
            if (pass == 0) {
                adjacency_[cursor[e.v]] = e.u;
                slot_edge_[cursor[e.v]++] = id;
            } else {
                adjacency_[cursor[e.u]] = e.v;
                slot_edge_[cursor[e.u]++] = id;
            }
        }
    }
}

bool Graph::has_edge(NodeId i, NodeId j) const noexcept {
    if (i >= node_count() || j >= node_count()) return false;
    auto a = neighbors(i);
    auto b = neighbors(j);
    if (b.size() < a.size()) {
        std::swap(a, b);
        std::swap(i, j);
    }
    return std::binary_search(a.begin(), a.end(), j);
}

std::uint32_t Graph::max_degree() const noexcept {
    std::uint32_t best = 0;
    for (NodeId i = 0; i < node_count(); ++i) best = std::max(best, degree(i));
    return best;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    if (s.node_count == 0) return s;

    const auto n = static_cast<double>(s.node_count);
    s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / n;

    double sum_k2 = 0.0;
    double sum_c = 0.0;
    std::vector<NodeId> scratch(g.max_degree());
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const double k = g.degree(i);
        sum_k2 += k * k;
        if (g.degree(i) < 2) continue;
        // Each tie among i's neighbors is seen from both endpoints.
        std::uint64_t twice_ties = 0;
        for (NodeId q : g.neighbors(i)) twice_ties += intersect_count(g.neighbors(i), g.neighbors(q));
        sum_c += static_cast<double>(twice_ties) / (k * (k - 1.0));
    }
    s.clustering = sum_c / n;
    s.heterogeneity = s.edge_count == 0 ? 0.0 : (sum_k2 / n) / (s.avg_degree * s.avg_degree);
    return s;
}

std::uint64_t edge_popularity(const Graph& g, NodeId i, NodeId j) {
    g.check_node(i);
    g.check_node(j);
    const auto ki = static_cast<std::uint64_t>(g.degree(i));
    const auto kj = static_cast<std::uint64_t>(g.degree(j));
    if (ki == 0 || kj == 0) return 0;
    return (ki - 1) * (kj - 1);
}

std::uint32_t common_neighbors_count(const Graph& g, NodeId i, NodeId j) {
    g.check_node(i);
    g.check_node(j);
    return static_cast<std::uint32_t>(intersect_count(g.neighbors(i), g.neighbors(j)));
}

std::vector<NodeId> component_labels(const Graph& g) {
    constexpr NodeId kUnset = ~NodeId{0};
    std::vector<NodeId> label(g.node_count(), kUnset);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (label[root] != kUnset) continue;
        label[root] = root;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : g.neighbors(x)) {
                if (label[y] == kUnset) {
                    label[y] = root;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

bool is_connected(const Graph& g) {
    const auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](NodeId l) { return l == 0; });
}

Subgraph giant_component(const Graph& g) {
    if (g.node_count() == 0) throw EmptyGraphError("giant_component of an empty graph");
    const auto labels = component_labels(g);
    std::vector<std::size_t> size(g.node_count(), 0);
    for (NodeId l : labels) ++size[l];
    // Labels are the smallest member id, so scanning ascending and keeping the
    // first strict maximum applies the tie rule.
    NodeId best = 0;
    for (NodeId l = 0; l < g.node_count(); ++l) {
        if (size[l] > size[best]) best = l;
    }

    Subgraph out;
    std::vector<NodeId> remap(g.node_count(), ~NodeId{0});
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (labels[i] == best) {
            remap[i] = static_cast<NodeId>(out.original_ids.size());
            out.original_ids.push_back(i);
        }
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (labels[e.u] == best) kept.emplace_back(remap[e.u], remap[e.v]);
    }
    out.graph = Graph(out.original_ids.size(), kept);
    return out;
}

}  // namespace lpbench
