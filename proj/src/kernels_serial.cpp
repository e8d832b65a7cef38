#include <algorithm>
#include <cmath>

#include "lureduce/kernels.hpp"

namespace lureduce::kernels::serial {

void rotate_pairs(std::span<Complex> amps, const PairLayout& layout, const Mat2& rot) {
    const std::size_t block = layout.stride * static_cast<std::size_t>(layout.n);
    const std::size_t off_a = static_cast<std::size_t>(layout.level_a) * layout.stride;
    const std::size_t off_b = static_cast<std::size_t>(layout.level_b) * layout.stride;
    for (std::size_t hi = 0; hi < amps.size(); hi += block) {
        for (std::size_t lo = 0; lo < layout.stride; ++lo) {
            Complex& x = amps[hi + lo + off_a];
            Complex& y = amps[hi + lo + off_b];
            const Complex nx = rot.m00 * x + rot.m01 * y;
            const Complex ny = rot.m10 * x + rot.m11 * y;
            x = nx;
            y = ny;
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const Complex& a : amps) acc += std::norm(a);
    return acc;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace lureduce::kernels::serial
