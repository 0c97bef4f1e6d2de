#include "lpbench/generators.hpp"
#include "lpbench/intersect.hpp"
#include "lpbench/predictors.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lpbench;

namespace {

// K4 without edge (0, 1): nodes 0 and 1 have degree 2, both common neighbors degree 3.
Graph k4_minus_edge() {
    const std::vector<Edge> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return Graph(4, edges);
}

}  // namespace

TEST(Measures, NamesRoundTrip) {
    for (Measure m : kAllMeasures) EXPECT_EQ(parse_measure(measure_name(m)), m);
    EXPECT_EQ(parse_measure("XX"), std::nullopt);
}

TEST(Measures, HandComputedValuesOnK4MinusEdge) {
    const Graph g = k4_minus_edge();
    EXPECT_DOUBLE_EQ(score(Measure::CN, g, 0, 1), 2.0);
    EXPECT_DOUBLE_EQ(score(Measure::PA, g, 0, 1), 4.0);
    EXPECT_DOUBLE_EQ(score(Measure::LHN, g, 0, 1), 0.5);
    EXPECT_DOUBLE_EQ(score(Measure::AA, g, 0, 1), 2.0 / std::log(3.0));
    EXPECT_DOUBLE_EQ(score(Measure::RA, g, 0, 1), 2.0 / 3.0);
    for (Measure m : {Measure::SAI, Measure::JI, Measure::SPI, Measure::HPI, Measure::HDI}) {
        EXPECT_DOUBLE_EQ(score(m, g, 0, 1), 1.0) << measure_name(m);
    }
}

TEST(Measures, ZeroCommonNeighborsScoreZeroExceptPa) {
    const Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    for (Measure m : kAllMeasures) {
        const double s = score(m, path, 0, 3);
        if (m == Measure::PA) {
            EXPECT_DOUBLE_EQ(s, 1.0);
        } else {
            EXPECT_DOUBLE_EQ(s, 0.0) << measure_name(m);
        }
    }
}

TEST(Measures, RejectsBadPairs) {
    const Graph g = k4_minus_edge();
    EXPECT_THROW((void)score(Measure::CN, g, 1, 1), std::invalid_argument);
    EXPECT_THROW((void)score(Measure::CN, g, 0, 9), GraphError);
}

TEST(Measures, MatchBruteForceOnRandomGraphs) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng.below(30);
        const auto edges = naive::random_edges(n, 0.1 + 0.6 * rng.uniform01(), rng);
        const Graph g(n, edges);
        const naive::Graph ng(n, edges);
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = i + 1; j < n; ++j) {
                for (Measure m : kAllMeasures) {
                    const double want = naive::score(m, ng, i, j);
                    const double got = score(m, g, i, j);
                    if (naive::is_rational(m)) {
                        EXPECT_EQ(got, want) << measure_name(m);
                    } else {
                        EXPECT_NEAR(got, want, 1e-12) << measure_name(m);
                    }
                    EXPECT_EQ(got, score(m, g, j, i));
                }
            }
        }
    }
}

TEST(Measures, RatioIndicesBoundedByOne) {
    const Graph g = make_preferential_attachment(200, 3, 0.6, 2);
    PairScorer scorer(g);
    for (NodeId i = 0; i < 60; ++i) {
        for (NodeId j = i + 1; j < 60; ++j) {
            for (Measure m : {Measure::SAI, Measure::JI, Measure::SPI, Measure::HPI, Measure::HDI}) {
                const double s = scorer.score(m, i, j);
                EXPECT_GE(s, 0.0);
                EXPECT_LE(s, 1.0);
            }
        }
    }
}

TEST(Measures, IdenticalAcrossSimdLevels) {
    const Graph g = make_preferential_attachment(400, 5, 0.7, 9);
    const SimdLevel before = active_simd_level();
    std::vector<double> scalar, vector;
    for (SimdLevel level : {SimdLevel::Scalar, SimdLevel::Avx2}) {
        if (!simd_level_available(level)) continue;
        set_simd_level(level);
        PairScorer scorer(g);
        auto& out = level == SimdLevel::Scalar ? scalar : vector;
        for (NodeId i = 0; i < 80; ++i)
            for (NodeId j = i + 1; j < 80; ++j)
                for (Measure m : {Measure::AA, Measure::RA, Measure::CN}) out.push_back(scorer.score(m, i, j));
    }
    set_simd_level(before);
    if (vector.empty()) GTEST_SKIP() << "no vector level available";
    EXPECT_EQ(scalar, vector);  // bitwise equal, not merely close
}

TEST(Ranking, TiesBrokenByCanonicalPair) {
    EXPECT_TRUE(ranks_before({0, 5, 2.0}, {0, 1, 1.0}));
    EXPECT_TRUE(ranks_before({0, 1, 1.0}, {0, 5, 1.0}));
    EXPECT_TRUE(ranks_before({0, 9, 1.0}, {1, 2, 1.0}));
    EXPECT_FALSE(ranks_before({0, 1, 1.0}, {0, 1, 1.0}));
}

TEST(Ranking, ScoreCandidatesSortsAndRejectsTrainingEdges) {
    const Graph g = k4_minus_edge();
    const std::vector<NodePair> ok{{0, 1}};
    const auto ranked = score_candidates(Measure::CN, g, ok);
    ASSERT_EQ(ranked.size(), 1u);
    EXPECT_DOUBLE_EQ(ranked[0].score, 2.0);
    const std::vector<NodePair> bad{{0, 2}};
    EXPECT_THROW((void)score_candidates(Measure::CN, g, bad), std::invalid_argument);
}

TEST(NonEdges, CursorMatchesBruteForce) {
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng.below(40);
        const auto edges = naive::random_edges(n, 0.15, rng);
        const Graph g(n, edges);
        const naive::Graph ng(n, edges);
        std::vector<NodePair> all, positive;
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = i + 1; j < n; ++j) {
                if (ng.has(i, j)) continue;
                all.emplace_back(i, j);
                if (!ng.common(i, j).empty()) positive.emplace_back(i, j);
            }
        }
        EXPECT_EQ(enumerate_non_edges(g, false), all);
        EXPECT_EQ(enumerate_non_edges(g, true), positive);
    }
}
