#include "lpbench/evaluator.hpp"
#include "lpbench/generators.hpp"
#include "lpbench/samplers.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace lpbench;

namespace {

struct Split {
    std::size_t n;
    std::vector<Edge> train;
    std::vector<Edge> probe;
};

Split random_split(Rng& rng, std::size_t n, double p, double sf) {
    const auto edges = naive::random_edges(n, p, rng);
    const Graph full(n, edges);
    const Partition part = sample_pr(full, sf, rng());
    return {n, part.train, part.probe};
}

}  // namespace

TEST(Auc, ExactMatchesBruteForce) {
    Rng rng(21);
    int checked = 0;
    while (checked < 40) {
        const Split s = random_split(rng, 6 + rng.below(20), 0.3, 0.8);
        const Graph train(s.n, s.train);
        const naive::Graph ng(s.n, s.train);
        if (s.probe.empty() || naive::nonexistent_pairs(ng, s.probe).empty()) continue;
        for (Measure m : kAllMeasures) {
            EXPECT_NEAR(auc_exact(m, train, s.probe), naive::auc_exact(m, ng, s.probe), 1e-12) << measure_name(m);
        }
        ++checked;
    }
}

TEST(Auc, K4MinusTwoEdges) {
    // Training K4 without (0,1) and (2,3); probe {(0,1)}; the only
    // nonexistent pair is (2,3). Both pairs have CN = 2, so AUC = 0.5.
    const std::vector<Edge> train_edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    const Graph train(4, train_edges);
    const std::vector<Edge> probe{{0, 1}};
    EXPECT_DOUBLE_EQ(auc_exact(Measure::CN, train, probe), 0.5);
    EXPECT_DOUBLE_EQ(auc_sampled(Measure::CN, train, probe, 1000, 3), 0.5);
}

TEST(Auc, PerfectAndWorstSeparation) {
    // Path 0-1-2 plus isolated-ish tail: probe (0,2) has CN 1, nonexistent pairs have CN 0.
    const std::vector<Edge> train_edges{{0, 1}, {1, 2}, {3, 4}};
    const Graph train(5, train_edges);
    const std::vector<Edge> probe{{0, 2}};
    EXPECT_DOUBLE_EQ(auc_exact(Measure::CN, train, probe), 1.0);
    EXPECT_DOUBLE_EQ(auc_sampled(Measure::CN, train, probe, 5000, 1), 1.0);
    const std::vector<Edge> bad_probe{{0, 4}};
    // (0,2) now is nonexistent with CN 1 > 0; every other pair ties at 0.
    const double want = naive::auc_exact(Measure::CN, naive::Graph(5, train_edges), bad_probe);
    EXPECT_DOUBLE_EQ(auc_exact(Measure::CN, train, bad_probe), want);
    EXPECT_LT(want, 0.5);
}

TEST(Auc, ConstantScoreGivesOneHalf) {
    // Ring as training graph: every node has degree 2, so PA is constant.
    const Graph full_ring = make_ring(12);
    const std::vector<Edge> probe{{0, 6}, {3, 9}};
    EXPECT_DOUBLE_EQ(auc_exact(Measure::PA, full_ring, probe), 0.5);
    EXPECT_DOUBLE_EQ(auc_sampled(Measure::PA, full_ring, probe, 2000, 8), 0.5);
}

TEST(Auc, SampledWithinFourSigmaOfExact) {
    Rng rng(33);
    int outside = 0, trials = 0;
    while (trials < 20) {
        const Split s = random_split(rng, 30 + rng.below(20), 0.2, 0.8);
        const Graph train(s.n, s.train);
        if (s.probe.empty()) continue;
        const double exact = auc_exact(Measure::RA, train, s.probe);
        const std::uint64_t n = 100000;
        const double sampled = auc_sampled(Measure::RA, train, s.probe, n, rng());
        const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(n));
        if (std::abs(sampled - exact) > 4 * sigma + 1e-12) ++outside;
        ++trials;
    }
    EXPECT_LE(outside, 1);
}

TEST(Auc, MultiEqualsSingleMeasureRuns) {
    const Graph g = make_preferential_attachment(300, 3, 0.5, 2);
    const Partition p = sample_pr(g, 0.9, 5);
    const Graph train(g.node_count(), p.train);
    const auto all = auc_sampled_multi(kAllMeasures, train, p.probe, 20000, 77);
    for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
        EXPECT_EQ(all[k], auc_sampled(kAllMeasures[k], train, p.probe, 20000, 77));
    }
}

TEST(Auc, Errors) {
    const Graph k4 = make_complete(4);
    EXPECT_THROW((void)auc_exact(Measure::CN, k4, {}), EvaluationError);
    // Training plus probe covers every pair.
    const std::vector<Edge> probe{{0, 1}};
    EXPECT_THROW((void)auc_exact(Measure::CN, make_complete(3), probe), EvaluationError);
}

TEST(Precision, MatchesBruteForce) {
    Rng rng(44);
    int checked = 0;
    while (checked < 60) {
        const Split s = random_split(rng, 5 + rng.below(25), 0.25, 0.7);
        if (s.probe.empty()) continue;
        const Graph train(s.n, s.train);
        const naive::Graph ng(s.n, s.train);
        const auto multi = precision_multi(kAllMeasures, train, s.probe);
        for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
            const Measure m = kAllMeasures[k];
            const double want = naive::precision(m, ng, s.probe);
            EXPECT_EQ(multi[k], want) << measure_name(m);
            EXPECT_EQ(precision(m, train, s.probe), want);
            // A fraction with denominator |E^P|.
            const double scaled = want * static_cast<double>(s.probe.size());
            EXPECT_NEAR(scaled, std::round(scaled), 1e-9);
        }
        ++checked;
    }
}

TEST(Precision, AllZeroProbeScores) {
    // Probe pair (0,4) has no common neighbor; two other pairs have CN > 0.
    const std::vector<Edge> train_edges{{0, 1}, {1, 2}, {2, 3}};
    const Graph train(5, train_edges);
    const std::vector<Edge> probe{{0, 4}};
    EXPECT_DOUBLE_EQ(precision(Measure::CN, train, probe), 0.0);
    const std::vector<Edge> good{{0, 2}};
    EXPECT_DOUBLE_EQ(precision(Measure::CN, train, good), 1.0);
}

TEST(Precision, InvariantUnderRelabelingWithoutBoundaryTies) {
    // RA scores are almost surely distinct on this graph, so the top list
    // does not depend on the canonical tie order.
    const Graph g = make_preferential_attachment(120, 3, 0.5, 3);
    const Partition p = sample_pr(g, 0.9, 2);
    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0u);
    Rng rng(6);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    auto relabel = [&](const std::vector<Edge>& es) {
        std::vector<Edge> out;
        for (const Edge& e : es) out.emplace_back(perm[e.u], perm[e.v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    const Graph train(g.node_count(), p.train);
    const Graph train2(g.node_count(), relabel(p.train));
    EXPECT_EQ(precision(Measure::RA, train, p.probe), precision(Measure::RA, train2, relabel(p.probe)));
    EXPECT_EQ(auc_exact(Measure::RA, train, p.probe), auc_exact(Measure::RA, train2, relabel(p.probe)));
}

TEST(Histograms, StarLeafEdgesHavePopularityZero) {
    const Graph star = make_star(5);
    const std::vector<Edge> probe(star.edges().begin(), star.edges().end());
    const Histogram h = probe_distribution(star, probe, EdgeProperty::Popularity);
    EXPECT_DOUBLE_EQ(h.mass[0], 1.0);
}

TEST(Histograms, TriangleEdgeHasOneCommonNeighbor) {
    const Graph k3 = make_complete(3);
    const std::vector<Edge> probe{{0, 1}};
    const Histogram h = probe_distribution(k3, probe, EdgeProperty::CommonNeighbors);
    ASSERT_GE(h.mass.size(), 2u);
    EXPECT_DOUBLE_EQ(h.mass[1], 1.0);
    EXPECT_DOUBLE_EQ(h.mass[0], 0.0);
}

TEST(Histograms, PopularityBinsAreLogSpaced) {
    Binning b{EdgeProperty::Popularity, 0};
    EXPECT_EQ(b.bin_of(0), 0u);
    EXPECT_EQ(b.bin_of(1), 1u);
    EXPECT_EQ(b.bin_of(2), 2u);
    EXPECT_EQ(b.bin_of(3), 2u);
    EXPECT_EQ(b.bin_of(4), 3u);
    EXPECT_EQ(b.lower(3), 4u);
    EXPECT_EQ(b.upper(3), 8u);
}

TEST(Histograms, MassSumsToOne) {
    const Graph g = make_preferential_attachment(500, 3, 0.6, 1);
    const Partition p = sample_ff(g, 0.9, 0.8, 3);
    for (EdgeProperty kind : {EdgeProperty::Popularity, EdgeProperty::CommonNeighbors}) {
        const Graph train(g.node_count(), p.train);
        for (const Graph* src : {static_cast<const Graph*>(nullptr), &train}) {
            const Histogram h = probe_distribution(g, p.probe, kind, src);
            EXPECT_NEAR(std::accumulate(h.mass.begin(), h.mass.end(), 0.0), 1.0, 1e-12);
            EXPECT_EQ(h.binning, binning_for(g, kind));
        }
    }
}

TEST(Histograms, Averaging) {
    Histogram a{{EdgeProperty::CommonNeighbors, 2}, {1.0, 0.0}, 1};
    Histogram b{{EdgeProperty::CommonNeighbors, 2}, {0.0, 1.0}, 1};
    const std::vector<Histogram> one{a};
    const Histogram same = average_histograms(one);
    EXPECT_EQ(same.mass, a.mass);
    EXPECT_EQ(same.rep_count, 1u);
    const std::vector<Histogram> two{a, a};
    EXPECT_EQ(average_histograms(two).rep_count, 2u);
    EXPECT_EQ(average_histograms(two).mass, a.mass);
    const std::vector<Histogram> mixed{a, b};
    EXPECT_EQ(average_histograms(mixed).mass, (std::vector<double>{0.5, 0.5}));
    Histogram c{{EdgeProperty::CommonNeighbors, 3}, {0.0, 0.0, 1.0}, 1};
    const std::vector<Histogram> bad{a, c};
    EXPECT_THROW((void)average_histograms(bad), EvaluationError);
    EXPECT_THROW((void)average_histograms({}), EvaluationError);
}
