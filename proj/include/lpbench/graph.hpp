#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbench {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Unordered node pair stored canonically (u < v).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) noexcept : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NodePair = Edge;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
        : GraphError((source.empty() ? std::string{} : source + ": ") + "line " + std::to_string(line) + ": " +
                     detail),
          line_(line),
          detail_(detail) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

class EmptyGraphError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Immutable undirected simple graph in CSR form.
///
/// Neighbor lists are sorted ascending. `edges()` is the sorted canonical edge
/// list and edge ids index into it; `slot_edge(i, p)` maps the p-th neighbor
/// slot of node i back to its edge id.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; self-loops are dropped and duplicates merged.
    Graph(std::size_t node_count, std::span<const Edge> edges);

    [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    [[nodiscard]] std::uint32_t degree(NodeId i) const noexcept {
        return static_cast<std::uint32_t>(offsets_[i + 1] - offsets_[i]);
    }
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId i) const noexcept {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }
    [[nodiscard]] EdgeId slot_edge(NodeId i, std::size_t slot) const noexcept {
        return slot_edge_[offsets_[i] + slot];
    }
    [[nodiscard]] bool has_edge(NodeId i, NodeId j) const noexcept;
    [[nodiscard]] std::uint32_t max_degree() const noexcept;

    void check_node(NodeId i) const {
        if (i >= node_count()) throw GraphError("unknown node id " + std::to_string(i));
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<EdgeId> slot_edge_;
    std::vector<Edge> edges_;
};

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double avg_degree = 0.0;
    double clustering = 0.0;
    double heterogeneity = 0.0;
};

[[nodiscard]] GraphStats stats(const Graph& g);

/// (k_i - 1)(k_j - 1) on the given graph's degrees.
[[nodiscard]] std::uint64_t edge_popularity(const Graph& g, NodeId i, NodeId j);

/// |n(i) ∩ n(j)|.
[[nodiscard]] std::uint32_t common_neighbors_count(const Graph& g, NodeId i, NodeId j);

/// Connected-component label per node, components numbered by smallest member.
[[nodiscard]] std::vector<NodeId> component_labels(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<NodeId> original_ids;  // new id -> id in the parent graph
};

/// Largest connected component, ids re-compacted in ascending parent-id order.
/// Ties go to the component holding the smallest parent id.
[[nodiscard]] Subgraph giant_component(const Graph& g);

// --- edge-list ingestion -------------------------------------------------

struct LoadOptions {
    std::vector<std::string> comment_prefixes{"#", "%"};
    /// Empty means any run of whitespace separates tokens.
    std::string separator;
    /// Numeric labels are reported zero-based (value - 1) in the label table.
    bool one_indexed = false;
};

struct LoadDiagnostics {
    std::size_t lines_read = 0;
    std::size_t comment_lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
};

struct LoadedGraph {
    Graph graph;
    /// Original token for each compact node id.
    std::vector<std::string> labels;
    LoadDiagnostics diagnostics;
};

/// Reads a two-column edge list. Node ids are assigned in ascending numeric
/// order when every token is an integer, otherwise in first-appearance order.
/// Extra columns after the first two (weights, timestamps) are ignored.
[[nodiscard]] LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
[[nodiscard]] LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

}  // namespace lpbench
