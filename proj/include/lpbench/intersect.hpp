#pragma once

// Sorted-set intersection kernels over neighbor lists.
//
// Every kernel has a portable scalar reference and, where the build target
// allows it, an AVX2 variant. The active variant is chosen once at startup
// from CPU features and may be pinned with LPBENCH_SIMD=scalar|avx2 or
// set_simd_level(). All variants return identical results; collected
// elements are always written in ascending order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lpbench {

enum class SimdLevel { Scalar, Avx2 };

[[nodiscard]] std::string_view simd_level_name(SimdLevel level) noexcept;

/// Best level supported by this CPU and build.
[[nodiscard]] SimdLevel detect_simd_level() noexcept;
[[nodiscard]] bool simd_level_available(SimdLevel level) noexcept;

[[nodiscard]] SimdLevel active_simd_level() noexcept;
/// Throws std::invalid_argument if `level` is not available.
void set_simd_level(SimdLevel level);

namespace kernels {

using Ids = std::span<const std::uint32_t>;

std::size_t intersect_count_scalar(Ids a, Ids b) noexcept;
std::size_t intersect_collect_scalar(Ids a, Ids b, std::uint32_t* out) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
#define LPBENCH_HAVE_AVX2_KERNELS 1
std::size_t intersect_count_avx2(Ids a, Ids b) noexcept;
std::size_t intersect_collect_avx2(Ids a, Ids b, std::uint32_t* out) noexcept;
#endif

}  // namespace kernels

/// |a ∩ b| for strictly increasing sequences.
[[nodiscard]] std::size_t intersect_count(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b) noexcept;

/// Writes a ∩ b to `out` (capacity ≥ min(|a|, |b|)) and returns its size.
std::size_t intersect_collect(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b,
                              std::uint32_t* out) noexcept;

}  // namespace lpbench
