#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lureduce {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
    Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    static Mat2 identity() { return {}; }
    Mat2 adjoint() const { return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)}; }
    // max_ij |(M M^dagger - I)_ij|
    double unitarity_defect() const;
};

Mat2 operator*(const Mat2& a, const Mat2& b);

/// Default cap on the number of stored amplitudes (n^l).
inline constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 26;

/// Tolerance used when a state is required to be normalized.
inline constexpr double kNormTolerance = 1e-10;

/// Tolerance for accepting a 2x2 matrix as unitary.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Basis label: one digit in [0, n) per site, site 0 first.
using MultiIndex = std::vector<int>;

/// n^l, or throws CapacityError when it exceeds `cap`.
std::size_t checked_dimension(int n, int l, std::size_t cap = kDefaultMaxAmplitudes);

/// Little-endian encoding: flat = sum_i digits[i] * n^i.
std::size_t index_encode(std::span<const int> digits, int n);
MultiIndex index_decode(std::size_t flat, int n, int l);

/// Pure state of l sites with n levels each. Amplitudes are stored densely in
/// little-endian flat order (site 0 is the least significant digit).
class PureState {
public:
    PureState() = default;

    // Validates shape only. Use normalized() when the norm must be checked.
    PureState(int n, int l, std::vector<Complex> amplitudes,
              std::size_t cap = kDefaultMaxAmplitudes);

    /// Same as the constructor but also requires |psi|^2 = 1 within kNormTolerance.
    static PureState normalized(int n, int l, std::vector<Complex> amplitudes,
                                std::size_t cap = kDefaultMaxAmplitudes);

    /// Computational basis state |digits>.
    static PureState basis(int n, std::span<const int> digits);

    int levels() const { return n_; }
    int sites() const { return l_; }
    std::size_t size() const { return amps_.size(); }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    const Complex& operator[](std::size_t flat) const { return amps_[flat]; }
    Complex& operator[](std::size_t flat) { return amps_[flat]; }

    /// n^site.
    std::size_t stride(int site) const;

    double norm_squared() const;
    double norm() const;

private:
    int n_ = 2;
    int l_ = 0;
    std::vector<Complex> amps_;
};

Complex amplitude_at(const PureState& state, std::span<const int> digits);

/// Acts with `rot` on span{|level_a>, |level_b>} of `site` (identity elsewhere):
/// for every pair (p, q) differing only in that digit, (psi[p], psi[q]) <- rot (psi[p], psi[q]).
void apply_plane_rotation_inplace(PureState& state, int site, int level_a, int level_b,
                                  const Mat2& rot);

PureState apply_plane_rotation(PureState state, int site, int level_a, int level_b,
                               const Mat2& rot);

/// Seeded random state. Real and imaginary parts are independent standard
/// normals from Box-Muller over std::mt19937_64 (53-bit uniforms), then the
/// vector is normalized. Output is identical on every platform for a seed.
PureState random_state(int n, int l, std::uint64_t seed,
                       std::size_t cap = kDefaultMaxAmplitudes);

/// Tensor product of one length-n vector per site; factors[0] is site 0.
PureState product_state(const std::vector<std::vector<Complex>>& factors);

/// Deterministic seeded random unitary 2x2 (used by tests and benchmarks).
Mat2 random_unitary2(std::uint64_t seed);

}  // namespace lureduce
