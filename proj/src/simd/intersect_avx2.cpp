// Compiled with -mavx2; only reached when the CPU reports AVX2.
#include "lpbench/intersect.hpp"

#include <immintrin.h>

namespace lpbench::kernels {

namespace {

// Blocks of eight from each list are compared all-against-all by rotating the
// b block through the eight lanes. The block with the smaller maximum is
// retired; both are retired on equal maxima. Because both inputs are strictly
// increasing an element can match at most once, and matches come out in
// ascending order.
template <typename OnMatch>
inline void block_intersect(Ids a, Ids b, std::size_t& i, std::size_t& j, OnMatch&& on_match) noexcept {
    const __m256i rot1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
    while (i + 8 <= a.size() && j + 8 <= b.size()) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
        __m256i hits = _mm256_cmpeq_epi32(va, vb);
        for (int r = 1; r < 8; ++r) {
            vb = _mm256_permutevar8x32_epi32(vb, rot1);
            hits = _mm256_or_si256(hits, _mm256_cmpeq_epi32(va, vb));
        }
        const auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hits)));
        if (mask != 0) on_match(i, mask);

        const std::uint32_t a_max = a[i + 7];
        const std::uint32_t b_max = b[j + 7];
        if (a_max <= b_max) i += 8;
        if (b_max <= a_max) j += 8;
    }
}

}  // namespace

std::size_t intersect_count_avx2(Ids a, Ids b) noexcept {
    std::size_t i = 0, j = 0, count = 0;
    block_intersect(a, b, i, j, [&](std::size_t, unsigned mask) {
        count += static_cast<std::size_t>(__builtin_popcount(mask));
    });
    return count + intersect_count_scalar(a.subspan(i), b.subspan(j));
}

std::size_t intersect_collect_avx2(Ids a, Ids b, std::uint32_t* out) noexcept {
    std::size_t i = 0, j = 0, count = 0;
    block_intersect(a, b, i, j, [&](std::size_t base, unsigned mask) {
        while (mask != 0) {
            out[count++] = a[base + static_cast<std::size_t>(__builtin_ctz(mask))];
            mask &= mask - 1;
        }
    });
    return count + intersect_collect_scalar(a.subspan(i), b.subspan(j), out + count);
}

}  // namespace lpbench::kernels
