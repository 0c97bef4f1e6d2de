#pragma once

// Edge partitions driven by graph-sampling procedures.
//
// Each sampler grows the training set E^T one edge at a time until it holds
// exactly ceil(s_f * |E|) edges; the probe set E^P is the complement. Every
// sampler is a pure function of (graph, spec): all randomness comes from an
// Rng seeded with spec.seed.

#include "lpbench/graph.hpp"
#include "lpbench/rng.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpbench {

enum class SamplerMethod { BFS, MHRW, FS, FF, PR };

inline constexpr SamplerMethod kAllSamplers[] = {SamplerMethod::BFS, SamplerMethod::MHRW, SamplerMethod::FS,
                                                 SamplerMethod::FF, SamplerMethod::PR};

[[nodiscard]] std::string_view sampler_name(SamplerMethod method) noexcept;
[[nodiscard]] std::optional<SamplerMethod> parse_sampler(std::string_view name) noexcept;

struct SamplerSpec {
    SamplerMethod method = SamplerMethod::PR;
    double sample_fraction = 0.9;
    std::uint32_t walkers = 100;         // FS dimension m
    double burn_probability = 0.8;       // FF forward-burning probability p_f
    std::uint64_t seed = 0;

    /// Parameters that affect this method only, e.g. "sf=0.9;m=100".
    [[nodiscard]] std::string canonical_params() const;
};

struct Partition {
    std::vector<Edge> train;  // sorted canonical
    std::vector<Edge> probe;  // sorted canonical
};

class SamplerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters for the given graph (m > |V|, p_f outside (0,1), ...).
class SamplerParameterError : public SamplerError {
public:
    using SamplerError::SamplerError;
};

/// A walk exceeded its step budget before reaching the target.
class SamplerBudgetError : public SamplerError {
public:
    using SamplerError::SamplerError;
};

/// Optional run-time record of a sampler invocation.
struct SamplerTrace {
    std::uint64_t steps = 0;     // walk proposals / nodes popped
    std::uint64_t restarts = 0;  // FF re-ignitions
    /// When non-empty on entry (sized |V|), incremented once per walk step for
    /// the node the walker occupies after the step (stay-steps included).
    std::vector<std::uint64_t> visits;
};

/// Walk budget multiplier: a walk may take at most this many steps per
/// training edge it has to collect.
inline constexpr std::uint64_t kStepBudgetPerEdge = 10'000;

/// ceil(s_f * |E|), computed with a small tolerance so that products such as
/// 0.7 * 10 land on 7 rather than 8.
[[nodiscard]] std::size_t target_train_size(double sample_fraction, std::size_t edge_count);

[[nodiscard]] Partition sample_bfs(const Graph& g, double sample_fraction, std::uint64_t seed,
                                   SamplerTrace* trace = nullptr);
/// Same as sample_bfs but with a fixed start node.
[[nodiscard]] Partition sample_bfs_from(const Graph& g, double sample_fraction, NodeId start);
[[nodiscard]] Partition sample_mhrw(const Graph& g, double sample_fraction, std::uint64_t seed,
                                    SamplerTrace* trace = nullptr);
[[nodiscard]] Partition sample_fs(const Graph& g, double sample_fraction, std::uint32_t walkers, std::uint64_t seed,
                                  SamplerTrace* trace = nullptr);
[[nodiscard]] Partition sample_ff(const Graph& g, double sample_fraction, double burn_probability,
                                  std::uint64_t seed, SamplerTrace* trace = nullptr);
[[nodiscard]] Partition sample_pr(const Graph& g, double sample_fraction, std::uint64_t seed);

[[nodiscard]] Partition sample(const Graph& g, const SamplerSpec& spec, SamplerTrace* trace = nullptr);

/// Plain (unweighted) random walk node visits, for bias comparisons against MHRW.
[[nodiscard]] std::vector<std::uint64_t> simple_walk_visits(const Graph& g, std::uint64_t steps, std::uint64_t seed);

/// Burn count drawn by Forest Fire: geometric on {0,1,...} with mean p/(1-p).
[[nodiscard]] std::uint64_t draw_burn_count(Rng& rng, double burn_probability);

}  // namespace lpbench
