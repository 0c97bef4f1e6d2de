#include "lpbench/intersect.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lpbench {

namespace {

using CountFn = std::size_t (*)(kernels::Ids, kernels::Ids) noexcept;
using CollectFn = std::size_t (*)(kernels::Ids, kernels::Ids, std::uint32_t*) noexcept;

struct KernelTable {
    SimdLevel level;
    CountFn count;
    CollectFn collect;
};

constexpr KernelTable kScalarTable{SimdLevel::Scalar, &kernels::intersect_count_scalar,
                                   &kernels::intersect_collect_scalar};
#ifdef LPBENCH_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{SimdLevel::Avx2, &kernels::intersect_count_avx2,
                                 &kernels::intersect_collect_avx2};
#endif

const KernelTable* table_for(SimdLevel level) noexcept {
#ifdef LPBENCH_HAVE_AVX2_KERNELS
    if (level == SimdLevel::Avx2) return &kAvx2Table;
#endif
    (void)level;
    return &kScalarTable;
}

const KernelTable* initial_table() {
    SimdLevel level = detect_simd_level();
    if (const char* env = std::getenv("LPBENCH_SIMD")) {
        const std::string value(env);
        if (value == "scalar") {
            level = SimdLevel::Scalar;
        } else if (value == "avx2" && simd_level_available(SimdLevel::Avx2)) {
            level = SimdLevel::Avx2;
        }
    }
    return table_for(level);
}

std::atomic<const KernelTable*>& active_table() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::string_view simd_level_name(SimdLevel level) noexcept {
    switch (level) {
        case SimdLevel::Scalar: return "scalar";
        case SimdLevel::Avx2: return "avx2";
    }
    return "unknown";
}

bool simd_level_available(SimdLevel level) noexcept {
    switch (level) {
        case SimdLevel::Scalar: return true;
        case SimdLevel::Avx2:
#ifdef LPBENCH_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

SimdLevel detect_simd_level() noexcept {
    return simd_level_available(SimdLevel::Avx2) ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

SimdLevel active_simd_level() noexcept {
    return active_table().load(std::memory_order_relaxed)->level;
}

void set_simd_level(SimdLevel level) {
    if (!simd_level_available(level)) {
        throw std::invalid_argument("SIMD level not available: " + std::string(simd_level_name(level)));
    }
    active_table().store(table_for(level), std::memory_order_relaxed);
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    return active_table().load(std::memory_order_relaxed)->count(a, b);
}

std::size_t intersect_collect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                              std::uint32_t* out) noexcept {
    return active_table().load(std::memory_order_relaxed)->collect(a, b, out);
}

}  // namespace lpbench
