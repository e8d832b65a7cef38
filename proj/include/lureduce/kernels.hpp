#pragma once

#include <cstddef>
#include <span>

#include "lureduce/state.hpp"

// Amplitude-array kernels. Each kernel exists in a plain serial form, kept as
// the reference for tests, and an OpenMP form used by the library.
namespace lureduce::kernels {

/// Geometry of one plane rotation on a flat amplitude array.
struct PairLayout {
    std::size_t stride;  // n^site
    int n;
    int level_a;
    int level_b;
};

/// Below this many pairs the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {
void rotate_pairs(std::span<Complex> amps, const PairLayout& layout, const Mat2& rot);
double norm_squared(std::span<const Complex> amps);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
}  // namespace serial

namespace omp {
void rotate_pairs(std::span<Complex> amps, const PairLayout& layout, const Mat2& rot);
double norm_squared(std::span<const Complex> amps);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
}  // namespace omp

}  // namespace lureduce::kernels
