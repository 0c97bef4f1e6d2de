#pragma once

#include "lpbench/graph.hpp"

#include <cstdint>
#include <string>

namespace lpbench {

/// Ring C_n. Requires n >= 3.
[[nodiscard]] Graph make_ring(std::size_t n);

/// Complete graph K_n.
[[nodiscard]] Graph make_complete(std::size_t n);

/// Star K_{1,leaves} with the hub at node 0.
[[nodiscard]] Graph make_star(std::size_t leaves);

/// G(n, m): exactly m distinct edges drawn uniformly at random.
[[nodiscard]] Graph make_random_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

/// Growth with preferential attachment and optional triadic closure
/// (Holme–Kim). Starts from a clique on `links_per_node + 1` nodes; each new
/// node makes `links_per_node` links. The first goes to a degree-proportional
/// target; each further link closes a triangle with probability
/// `triad_probability` (to a random neighbor of the previous target) and
/// otherwise is again degree-proportional. With triad_probability = 0 this is
/// the Barabási–Albert model.
[[nodiscard]] Graph make_preferential_attachment(std::size_t n, std::size_t links_per_node,
                                                 double triad_probability, std::uint64_t seed);

struct SyntheticSpec {
    std::string kind;  // ring | complete | star | random-uniform | preferential-attachment | clustered
    std::size_t n = 0;
    std::size_t m = 0;  // edge count (random-uniform) or links per node (preferential kinds)
    double triad_probability = 0.0;
    std::uint64_t seed = 0;
};

/// Dispatches on `kind`. "clustered" is preferential attachment with triadic
/// closure; defaults to m = 4, triad_probability = 0.8 when unset.
[[nodiscard]] Graph generate_synthetic(const SyntheticSpec& spec);

/// Parses "kind:n[:m[:triad]]" (seed supplied separately), e.g.
/// "clustered:1000:4:0.8" or "ring:50".
[[nodiscard]] SyntheticSpec parse_synthetic(const std::string& text, std::uint64_t seed);

}  // namespace lpbench
