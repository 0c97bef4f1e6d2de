#include "lpbench/intersect.hpp"

namespace lpbench::kernels {

std::size_t intersect_count_scalar(Ids a, Ids b) noexcept {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::size_t intersect_collect_scalar(Ids a, Ids b, std::uint32_t* out) noexcept {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            out[count++] = a[i];
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace lpbench::kernels
