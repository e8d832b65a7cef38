#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lureduce/kernels.hpp"

namespace lureduce::kernels::omp {

// Same arithmetic as serial::rotate_pairs, per pair, so results are bit-identical.
// Threads split whichever loop level is wider: the blocks above the site or the
// contiguous run below it.
void rotate_pairs(std::span<Complex> amps, const PairLayout& layout, const Mat2& rot) {
    const auto stride = static_cast<std::int64_t>(layout.stride);
    const std::int64_t block = stride * layout.n;
    const auto blocks = static_cast<std::int64_t>(amps.size()) / block;
    const std::int64_t off_a = layout.level_a * stride;
    const std::int64_t off_b = layout.level_b * stride;
    Complex* data = amps.data();
    const bool parallel = static_cast<std::size_t>(blocks * stride) >= kParallelThreshold;

    auto rotate_run = [&](Complex* base, std::int64_t lo_begin, std::int64_t lo_end) {
        for (std::int64_t lo = lo_begin; lo < lo_end; ++lo) {
            Complex& x = base[lo + off_a];
            Complex& y = base[lo + off_b];
            const Complex nx = rot.m00 * x + rot.m01 * y;
            const Complex ny = rot.m10 * x + rot.m11 * y;
            x = nx;
            y = ny;
        }
    };

    if (!parallel) {
        for (std::int64_t hi = 0; hi < blocks; ++hi) rotate_run(data + hi * block, 0, stride);
    } else if (blocks >= stride) {
#pragma omp parallel for schedule(static)
        for (std::int64_t hi = 0; hi < blocks; ++hi) rotate_run(data + hi * block, 0, stride);
    } else {
#pragma omp parallel
        for (std::int64_t hi = 0; hi < blocks; ++hi) {
#pragma omp for schedule(static)
            for (std::int64_t lo = 0; lo < stride; ++lo) {
                Complex& x = data[hi * block + lo + off_a];
                Complex& y = data[hi * block + lo + off_b];
                const Complex nx = rot.m00 * x + rot.m01 * y;
                const Complex ny = rot.m10 * x + rot.m11 * y;
                x = nx;
                y = ny;
            }
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    const auto count = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < count; ++i) acc += std::norm(data[i]);
    return acc;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    const auto count = static_cast<std::int64_t>(a.size());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (a.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < count; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace lureduce::kernels::omp
