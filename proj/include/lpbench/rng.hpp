#pragma once

// Seeded randomness for every sampler and estimator.
//
// The generator is xoshiro256** (Blackman & Vigna, 2018) seeded by expanding a
// single 64-bit seed with SplitMix64. All derived draws below use integer
// arithmetic or exact floating-point operations only, so a given seed yields
// the same stream on every conforming platform.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace lpbench {

/// SplitMix64 step: advances `state` and returns the mixed output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// 64-bit FNV-1a over raw bytes.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Order-sensitive combination of 64-bit words into one seed.
///
/// h0 = 0x6C70_6265_6E63_6800 ("lpbench\0"); for each word w:
/// h = splitmix64-output(state = h ^ w). Strings enter through fnv1a64.
class SeedHasher {
public:
    SeedHasher& add(std::uint64_t word) noexcept {
        std::uint64_t state = h_ ^ word;
        h_ = splitmix64(state);
        return *this;
    }
    SeedHasher& add(std::string_view text) noexcept { return add(fnv1a64(text)); }
    [[nodiscard]] std::uint64_t value() const noexcept { return h_; }

private:
    std::uint64_t h_ = 0x6C7062656E636800ULL;
};

class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection,
    /// so the result is exactly uniform. `bound` must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept {
        __uint128_t m = static_cast<__uint128_t>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<__uint128_t>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Number of consecutive successes of a Bernoulli(p) trial before the
    /// first failure: geometric on {0, 1, 2, ...} with success probability
    /// 1 - p and mean p / (1 - p). Uses comparisons only.
    std::uint64_t geometric_failures(double p) noexcept {
        std::uint64_t count = 0;
        while (uniform01() < p) ++count;
        return count;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace lpbench
