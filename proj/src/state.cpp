#include "lureduce/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "lureduce/errors.hpp"
#include "lureduce/kernels.hpp"

namespace lureduce {

double Mat2::unitarity_defect() const {
    const Mat2 p = *this * adjoint();
    return std::max({std::abs(p.m00 - 1.0), std::abs(p.m01), std::abs(p.m10), std::abs(p.m11 - 1.0)});
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

std::size_t checked_dimension(int n, int l, std::size_t cap) {
    if (n < 2) throw InvalidArgumentError("levels per site must be >= 2, got " + std::to_string(n));
    if (l < 1) throw InvalidArgumentError("site count must be >= 1, got " + std::to_string(l));
    std::size_t dim = 1;
    for (int i = 0; i < l; ++i) {
        if (dim > cap / static_cast<std::size_t>(n)) {
            throw CapacityError("state with n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                                " exceeds the cap of " + std::to_string(cap) + " amplitudes");
        }
        dim *= static_cast<std::size_t>(n);
    }
    return dim;
}

std::size_t index_encode(std::span<const int> digits, int n) {
    std::size_t flat = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= n) {
            throw InvalidIndexError("digit " + std::to_string(digits[i]) + " at site " +
                                    std::to_string(i) + " is outside [0, " + std::to_string(n) + ")");
        }
        flat += static_cast<std::size_t>(digits[i]) * place;
        place *= static_cast<std::size_t>(n);
    }
    return flat;
}

MultiIndex index_decode(std::size_t flat, int n, int l) {
    const std::size_t dim = checked_dimension(n, l, std::numeric_limits<std::size_t>::max());
    if (flat >= dim) {
        throw InvalidIndexError("flat index " + std::to_string(flat) + " is outside [0, " +
                                std::to_string(dim) + ")");
    }
    MultiIndex digits(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(n));
        flat /= static_cast<std::size_t>(n);
    }
    return digits;
}

PureState::PureState(int n, int l, std::vector<Complex> amplitudes, std::size_t cap)
    : n_(n), l_(l), amps_(std::move(amplitudes)) {
    const std::size_t dim = checked_dimension(n, l, cap);
    if (amps_.size() != dim) {
        throw InvalidArgumentError("expected " + std::to_string(dim) + " amplitudes, got " +
                                   std::to_string(amps_.size()));
    }
}

PureState PureState::normalized(int n, int l, std::vector<Complex> amplitudes, std::size_t cap) {
    PureState s(n, l, std::move(amplitudes), cap);
    const double nsq = s.norm_squared();
    if (std::abs(nsq - 1.0) > kNormTolerance) {
        throw InvalidArgumentError("state is not normalized: |psi|^2 = " + std::to_string(nsq));
    }
    return s;
}

PureState PureState::basis(int n, std::span<const int> digits) {
    const int l = static_cast<int>(digits.size());
    std::vector<Complex> amps(checked_dimension(n, l), Complex{});
    amps[index_encode(digits, n)] = 1.0;
    return PureState(n, l, std::move(amps));
}

std::size_t PureState::stride(int site) const {
    std::size_t s = 1;
    for (int i = 0; i < site; ++i) s *= static_cast<std::size_t>(n_);
    return s;
}

double PureState::norm_squared() const { return kernels::omp::norm_squared(amps_); }

double PureState::norm() const { return std::sqrt(norm_squared()); }

Complex amplitude_at(const PureState& state, std::span<const int> digits) {
    if (static_cast<int>(digits.size()) != state.sites()) {
        throw InvalidIndexError("expected " + std::to_string(state.sites()) + " digits, got " +
                                std::to_string(digits.size()));
    }
    return state[index_encode(digits, state.levels())];
}

void apply_plane_rotation_inplace(PureState& state, int site, int level_a, int level_b,
                                  const Mat2& rot) {
    if (site < 0 || site >= state.sites()) {
        throw InvalidArgumentError("site " + std::to_string(site) + " out of range");
    }
    if (level_a < 0 || level_b >= state.levels() || level_a >= level_b) {
        throw InvalidArgumentError("levels (" + std::to_string(level_a) + ", " +
                                   std::to_string(level_b) + ") must satisfy 0 <= a < b < n");
    }
    if (const double defect = rot.unitarity_defect(); !(defect <= kUnitarityTolerance)) {
        throw InvalidRotationError("rotation is not unitary (defect " + std::to_string(defect) + ")");
    }
    kernels::omp::rotate_pairs(state.amplitudes(),
                               {state.stride(site), state.levels(), level_a, level_b}, rot);
}

PureState apply_plane_rotation(PureState state, int site, int level_a, int level_b,
                               const Mat2& rot) {
    apply_plane_rotation_inplace(state, site, level_a, level_b, rot);
    return state;
}

namespace {

// Platform-independent normal sampler: std::normal_distribution is not
// specified bit-for-bit across standard libraries.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

PureState random_state(int n, int l, std::uint64_t seed, std::size_t cap) {
    const std::size_t dim = checked_dimension(n, l, cap);
    NormalStream normal(seed);
    std::vector<Complex> amps(dim);
    for (Complex& a : amps) {
        const double re = normal.next();
        const double im = normal.next();
        a = Complex{re, im};
    }
    const double scale = 1.0 / std::sqrt(kernels::serial::norm_squared(amps));
    for (Complex& a : amps) a *= scale;
    return PureState(n, l, std::move(amps), cap);
}

PureState product_state(const std::vector<std::vector<Complex>>& factors) {
    if (factors.empty()) throw InvalidArgumentError("product_state needs at least one factor");
    const int n = static_cast<int>(factors.front().size());
    const int l = static_cast<int>(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (static_cast<int>(factors[i].size()) != n) {
            throw InvalidArgumentError("factor " + std::to_string(i) + " has length " +
                                       std::to_string(factors[i].size()) + ", expected " +
                                       std::to_string(n));
        }
        if (std::abs(kernels::serial::norm_squared(factors[i]) - 1.0) > kNormTolerance) {
            throw InvalidArgumentError("factor " + std::to_string(i) + " is not normalized");
        }
    }
    const std::size_t dim = checked_dimension(n, l);
    std::vector<Complex> amps(dim);
    for (std::size_t flat = 0; flat < dim; ++flat) {
        Complex v{1.0};
        std::size_t rest = flat;
        for (int i = 0; i < l; ++i) {
            v *= factors[static_cast<std::size_t>(i)][rest % static_cast<std::size_t>(n)];
            rest /= static_cast<std::size_t>(n);
        }
        amps[flat] = v;
    }
    return PureState(n, l, std::move(amps));
}

Mat2 random_unitary2(std::uint64_t seed) {
    // First row from a random unit vector; second row is its orthogonal
    // complement times a random phase.
    NormalStream normal(seed);
    Complex x{normal.next(), normal.next()};
    Complex y{normal.next(), normal.next()};
    const double r = std::sqrt(std::norm(x) + std::norm(y));
    x /= r;
    y /= r;
    const double phi = normal.next();
    const Complex phase = std::polar(1.0, phi);
    return {x, y, -phase * std::conj(y), phase * std::conj(x)};
}

}  // namespace lureduce
