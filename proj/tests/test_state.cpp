#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lureduce/errors.hpp"
#include "lureduce/kernels.hpp"
#include "lureduce/state.hpp"

using namespace lureduce;

namespace {

PureState bell() {
    const double h = 1.0 / std::sqrt(2.0);
    return PureState(2, 2, {h, 0.0, 0.0, h});
}

}  // namespace

TEST_CASE("index_encode uses site 0 as least significant digit") {
    CHECK(index_encode(std::vector{1, 0}, 2) == 1);
    CHECK(index_encode(std::vector{0, 1}, 2) == 2);
    CHECK(index_encode(std::vector{2, 1}, 3) == 5);
    CHECK_THROWS_AS(index_encode(std::vector{0, 3}, 3), InvalidIndexError);
    CHECK_THROWS_AS(index_encode(std::vector{-1}, 3), InvalidIndexError);
}

TEST_CASE("index_decode") {
    CHECK(index_decode(1, 2, 3) == MultiIndex{1, 0, 0});
    CHECK(index_decode(4, 2, 3) == MultiIndex{0, 0, 1});
    CHECK(index_decode(5, 3, 2) == MultiIndex{2, 1});
    CHECK_THROWS_AS(index_decode(8, 2, 3), InvalidIndexError);
}

TEST_CASE("index round trip is exhaustive over several shapes") {
    for (auto [n, l] : {std::pair{2, 10}, {3, 7}, {5, 4}, {7, 3}, {10, 6}}) {
        const std::size_t dim = checked_dimension(n, l);
        for (std::size_t flat = 0; flat < dim; ++flat) {
            const MultiIndex d = index_decode(flat, n, l);
            REQUIRE(index_encode(d, n) == flat);
        }
    }
}

TEST_CASE("size cap") {
    CHECK(checked_dimension(2, 26) == (std::size_t{1} << 26));
    CHECK_THROWS_AS(checked_dimension(2, 27), CapacityError);
    CHECK_THROWS_AS(checked_dimension(2, 40), CapacityError);
    CHECK_THROWS_AS(checked_dimension(3, 4, 80), CapacityError);
    CHECK(checked_dimension(3, 4, 81) == 81);
    CHECK_THROWS_AS(random_state(2, 40, 1), CapacityError);
    CHECK_THROWS_AS(checked_dimension(1, 3), InvalidArgumentError);
    CHECK_THROWS_AS(checked_dimension(2, 0), InvalidArgumentError);
}

TEST_CASE("PureState construction checks") {
    CHECK_THROWS_AS(PureState(2, 2, {1.0, 0.0, 0.0}), InvalidArgumentError);
    CHECK_THROWS_AS(PureState::normalized(2, 1, {1.0, 1.0}), InvalidArgumentError);
    CHECK_NOTHROW(PureState::normalized(2, 1, {0.6, Complex{0.0, 0.8}}));
}

TEST_CASE("amplitude_at") {
    const PureState zero = PureState::basis(2, std::vector{0, 0});
    CHECK(amplitude_at(zero, std::vector{0, 0}) == Complex{1.0});
    CHECK(amplitude_at(zero, std::vector{1, 0}) == Complex{0.0});
    CHECK(std::abs(amplitude_at(bell(), std::vector{1, 1}) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(amplitude_at(zero, std::vector{2, 0}), InvalidIndexError);
    CHECK_THROWS_AS(amplitude_at(zero, std::vector{0}), InvalidIndexError);
}

TEST_CASE("random_state is deterministic and normalized") {
    const PureState a = random_state(2, 2, 7);
    const PureState b = random_state(2, 2, 7);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real() == b[i].real());
        CHECK(a[i].imag() == b[i].imag());
    }
    CHECK(random_state(2, 2, 8)[0] != a[0]);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(std::abs(random_state(3, 4, seed).norm() - 1.0) < 1e-12);
    }
    const PureState q = random_state(3, 3, 1);
    for (const Complex& amp : q.amplitudes()) CHECK(std::abs(amp) > 0.0);
}

TEST_CASE("random_state produces standard-normal components") {
    // Before normalization each component has variance 1, so after dividing by
    // the norm of 2*dim components each squared component averages 1/(2*dim).
    const PureState s = random_state(2, 16, 3);
    double sum_re = 0.0, sum_sq = 0.0;
    for (const Complex& a : s.amplitudes()) {
        sum_re += a.real();
        sum_sq += a.real() * a.real();
    }
    const double dim = static_cast<double>(s.size());
    CHECK(std::abs(sum_re / dim) * std::sqrt(2.0 * dim) < 0.02);
    CHECK(sum_sq == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("product_state") {
    const PureState z = product_state({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
    CHECK(z[0] == Complex{1.0});
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] == Complex{0.0});

    const double h = 1.0 / std::sqrt(2.0);
    const PureState plus = product_state({{h, h}, {h, h}});
    for (const Complex& a : plus.amplitudes()) CHECK(std::abs(a - 0.5) < 1e-15);

    const PureState t = product_state({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
    CHECK(t[index_encode(std::vector{0, 1}, 3)] == Complex{1.0});
    CHECK(t.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(product_state({{1.0, 0.0}, {1.0, 0.0, 0.0}}), InvalidArgumentError);
    CHECK_THROWS_AS(product_state({{1.0, 1.0}}), InvalidArgumentError);
}

TEST_CASE("product_state amplitudes are products of factor entries") {
    const std::vector<std::vector<Complex>> f = {
        {Complex{0.6, 0.0}, Complex{0.0, 0.8}, 0.0},
        {Complex{0.0, 0.6}, 0.0, Complex{0.8, 0.0}},
        {1.0 / std::sqrt(3.0), Complex{0.0, 1.0 / std::sqrt(3.0)}, -1.0 / std::sqrt(3.0)}};
    const PureState s = product_state(f);
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        const MultiIndex d = index_decode(flat, 3, 3);
        const Complex expect = f[0][d[0]] * f[1][d[1]] * f[2][d[2]];
        CHECK(std::abs(s[flat] - expect) < 1e-15);
    }
}

TEST_CASE("apply_plane_rotation: identity and the pair rule") {
    const PureState r = random_state(3, 3, 11);
    const PureState same = apply_plane_rotation(r, 1, 0, 2, Mat2::identity());
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(same[i] == r[i]);

    // rot = [[0,1],[-1,0]] on |00>, site 0: (psi[00], psi[10]) = rot (1,0)^T = (0,-1)^T.
    const PureState zero = PureState::basis(2, std::vector{0, 0});
    const PureState moved = apply_plane_rotation(zero, 0, 0, 1, {0.0, 1.0, -1.0, 0.0});
    CHECK(moved[index_encode(std::vector{0, 0}, 2)] == Complex{0.0});
    CHECK(moved[index_encode(std::vector{1, 0}, 2)] == Complex{-1.0});
    CHECK(moved[index_encode(std::vector{0, 1}, 2)] == Complex{0.0});
    CHECK(moved[index_encode(std::vector{1, 1}, 2)] == Complex{0.0});
}

TEST_CASE("apply_plane_rotation acts as rot on every (a, b) pair at the site") {
    const int n = 4, l = 3;
    const PureState s = random_state(n, l, 5);
    const Mat2 rot = random_unitary2(99);
    for (int site = 0; site < l; ++site) {
        const PureState out = apply_plane_rotation(s, site, 1, 3, rot);
        for (std::size_t flat = 0; flat < s.size(); ++flat) {
            MultiIndex d = index_decode(flat, n, l);
            const int digit = d[static_cast<std::size_t>(site)];
            if (digit != 1 && digit != 3) {
                // Untouched amplitudes are bit-identical.
                CHECK(out[flat].real() == s[flat].real());
                CHECK(out[flat].imag() == s[flat].imag());
                continue;
            }
            d[static_cast<std::size_t>(site)] = 1;
            const Complex x = s[index_encode(d, n)];
            d[static_cast<std::size_t>(site)] = 3;
            const Complex y = s[index_encode(d, n)];
            const Complex expect = digit == 1 ? rot.m00 * x + rot.m01 * y : rot.m10 * x + rot.m11 * y;
            CHECK(std::abs(out[flat] - expect) < 1e-15);
        }
    }
}

TEST_CASE("apply_plane_rotation preserves norm and is undone by the adjoint") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);
        const int l = 1 + static_cast<int>(seed % 5);
        const PureState s = random_state(n, l, seed);
        const Mat2 rot = random_unitary2(seed + 1000);
        const int site = static_cast<int>(seed % static_cast<std::uint64_t>(l));
        const int a = static_cast<int>(seed % static_cast<std::uint64_t>(n - 1));
        const int b = n - 1;
        const PureState out = apply_plane_rotation(s, site, a, b, rot);
        CHECK(std::abs(out.norm_squared() - s.norm_squared()) < 1e-12);
        const PureState back = apply_plane_rotation(out, site, a, b, rot.adjoint());
        CHECK(kernels::serial::max_abs_diff(back.amplitudes(), s.amplitudes()) < 1e-13);
    }
}

TEST_CASE("apply_plane_rotation argument errors") {
    PureState s = random_state(3, 2, 1);
    CHECK_THROWS_AS(apply_plane_rotation(s, 2, 0, 1, Mat2::identity()), InvalidArgumentError);
    CHECK_THROWS_AS(apply_plane_rotation(s, -1, 0, 1, Mat2::identity()), InvalidArgumentError);
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 1, 1, Mat2::identity()), InvalidArgumentError);
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 2, 1, Mat2::identity()), InvalidArgumentError);
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 0, 3, Mat2::identity()), InvalidArgumentError);
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 0, 1, {1.0, 0.0, 0.0, 2.0}), InvalidRotationError);
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 0, 1, {1.0, 1e-9, 0.0, 1.0}), InvalidRotationError);
    CHECK_NOTHROW(apply_plane_rotation(s, 0, 0, 1, {1.0, 1e-12, 0.0, 1.0}));
    CHECK_THROWS_AS(apply_plane_rotation(s, 0, 0, 1, {std::nan(""), 0.0, 0.0, 1.0}),
                    InvalidRotationError);
}

TEST_CASE("random_unitary2 is unitary") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK(random_unitary2(seed).unitarity_defect() < 1e-14);
}
