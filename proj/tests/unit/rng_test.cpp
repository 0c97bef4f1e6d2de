#include "lpbench/rng.hpp"
#include "lpbench/samplers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using lpbench::Rng;

TEST(SplitMix, KnownValues) {
    // Reference outputs of splitmix64 seeded with 1234567.
    std::uint64_t state = 1234567;
    EXPECT_EQ(lpbench::splitmix64(state), 6457827717110365317ULL);
    EXPECT_EQ(lpbench::splitmix64(state), 3203168211198807973ULL);
    EXPECT_EQ(lpbench::splitmix64(state), 9817491932198370423ULL);
}

TEST(Fnv, KnownValues) {
    EXPECT_EQ(lpbench::fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(lpbench::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(lpbench::fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(SeedHasher, OrderAndContentMatter) {
    using lpbench::SeedHasher;
    EXPECT_EQ(SeedHasher().add(1).add("x").value(), SeedHasher().add(1).add("x").value());
    EXPECT_NE(SeedHasher().add(1).add(2).value(), SeedHasher().add(2).add(1).value());
    EXPECT_NE(SeedHasher().add("ab").value(), SeedHasher().add("ba").value());
}

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        EXPECT_EQ(x, b());
        differs |= x != c();
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, BelowIsInRangeAndRoughlyUniform) {
    Rng rng(7);
    std::vector<int> counts(10, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto v = rng.below(10);
        ASSERT_LT(v, 10u);
        ++counts[v];
    }
    // 5 sigma for a binomial(1e5, 0.1).
    for (int c : counts) EXPECT_NEAR(c, draws / 10, 5 * std::sqrt(draws * 0.09));
    EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, Uniform01InHalfOpenUnitInterval) {
    Rng rng(9);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Geometric, MeanMatchesRatio) {
    for (double p : {0.2, 0.5, 0.8}) {
        Rng rng(11);
        const int draws = 200000;
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) sum += static_cast<double>(lpbench::draw_burn_count(rng, p));
        const double mean = p / (1.0 - p);
        const double sd = std::sqrt(p) / (1.0 - p);
        EXPECT_NEAR(sum / draws, mean, 5 * sd / std::sqrt(draws)) << "p = " << p;
    }
}

TEST(Geometric, ZeroProbabilityGivesZero) {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(lpbench::draw_burn_count(rng, 0.0), 0u);
}

TEST(Rng, XoshiroReferenceStream) {
    // Independently computed xoshiro256** outputs for SplitMix64-expanded seed 2024.
    Rng rng(2024);
    EXPECT_EQ(rng(), 1029197146548041518ULL);
    EXPECT_EQ(rng(), 14427268137155694693ULL);
    EXPECT_EQ(rng(), 1329179038587965441ULL);
}
