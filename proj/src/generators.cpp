#include "lpbench/generators.hpp"
#include "lpbench/rng.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace lpbench {

Graph make_ring(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ring needs at least 3 nodes");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
    return Graph(n, edges);
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph make_star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph make_random_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > pairs) {
        throw std::invalid_argument("random-uniform: " + std::to_string(m) + " edges exceed " +
                                    std::to_string(pairs) + " node pairs");
    }
    Rng rng(seed);
    std::set<Edge> chosen;
    while (chosen.size() < m) {
        const auto a = static_cast<NodeId>(rng.below(n));
        const auto b = static_cast<NodeId>(rng.below(n));
        if (a != b) chosen.emplace(a, b);
    }
    std::vector<Edge> edges(chosen.begin(), chosen.end());
    return Graph(n, edges);
}

Graph make_preferential_attachment(std::size_t n, std::size_t links_per_node, double triad_probability,
                                   std::uint64_t seed) {
    if (links_per_node == 0) throw std::invalid_argument("preferential-attachment: links per node must be positive");
    if (n < links_per_node + 1) {
        throw std::invalid_argument("preferential-attachment: need at least links_per_node + 1 nodes");
    }
    if (triad_probability < 0.0 || triad_probability > 1.0) {
        throw std::invalid_argument("preferential-attachment: triad probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<std::vector<NodeId>> adj(n);
    // Every edge endpoint once: uniform picks from it are degree-proportional.
    std::vector<NodeId> endpoints;
    auto link = [&](NodeId a, NodeId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        endpoints.push_back(a);
        endpoints.push_back(b);
    };
    const auto core = static_cast<NodeId>(links_per_node + 1);
    for (NodeId i = 0; i < core; ++i)
        for (NodeId j = i + 1; j < core; ++j) link(i, j);

    std::vector<NodeId> targets;
    for (auto v = static_cast<NodeId>(core); v < n; ++v) {
        targets.clear();
        auto taken = [&](NodeId t) { return std::find(targets.begin(), targets.end(), t) != targets.end(); };
        NodeId previous = endpoints[rng.below(endpoints.size())];
        targets.push_back(previous);
        while (targets.size() < links_per_node) {
            NodeId pick = previous;
            bool found = false;
            if (rng.uniform01() < triad_probability) {
                // Candidates: neighbors of the previous target not yet linked.
                std::vector<NodeId> open;
                for (NodeId w : adj[previous])
                    if (!taken(w)) open.push_back(w);
                if (!open.empty()) {
                    pick = open[rng.below(open.size())];
                    found = true;
                }
            }
            while (!found) {
                pick = endpoints[rng.below(endpoints.size())];
                found = !taken(pick);
            }
            targets.push_back(pick);
            previous = pick;
        }
        for (NodeId t : targets) link(v, t);
    }

    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b : adj[a])
            if (a < b) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph generate_synthetic(const SyntheticSpec& spec) {
    if (spec.kind == "ring") return make_ring(spec.n);
    if (spec.kind == "complete") return make_complete(spec.n);
    if (spec.kind == "star") return make_star(spec.n);
    if (spec.kind == "random-uniform") return make_random_uniform(spec.n, spec.m, spec.seed);
    if (spec.kind == "preferential-attachment") {
        return make_preferential_attachment(spec.n, spec.m == 0 ? 3 : spec.m, spec.triad_probability, spec.seed);
    }
    if (spec.kind == "clustered") {
        const double triad = spec.triad_probability > 0.0 ? spec.triad_probability : 0.8;
        return make_preferential_attachment(spec.n, spec.m == 0 ? 4 : spec.m, triad, spec.seed);
    }
    throw std::invalid_argument("unknown synthetic graph kind '" + spec.kind + "'");
}

SyntheticSpec parse_synthetic(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 4) {
        throw std::invalid_argument("synthetic spec must look like kind:n[:m[:triad]], got '" + text + "'");
    }
    static const std::set<std::string> kinds{"ring", "complete", "star", "random-uniform",
                                             "preferential-attachment", "clustered"};
    if (!kinds.count(parts[0])) throw std::invalid_argument("unknown synthetic graph kind '" + parts[0] + "'");
    SyntheticSpec spec;
    spec.kind = parts[0];
    spec.seed = seed;
    try {
        spec.n = std::stoul(parts[1]);
        if (parts.size() > 2) spec.m = std::stoul(parts[2]);
        if (parts.size() > 3) spec.triad_probability = std::stod(parts[3]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number in synthetic spec '" + text + "'");
    }
    return spec;
}

}  // namespace lpbench
