#include "lureduce/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lureduce/errors.hpp"

namespace lureduce::spectral {

Complex HermitianMatrix::trace() const {
    Complex t{};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double HermitianMatrix::off_diagonal_norm() const {
    double acc = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            if (r != c) acc += std::norm((*this)(r, c));
        }
    }
    return std::sqrt(acc);
}

double HermitianMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

HermitianMatrix reduced_density(const PureState& state) {
    if (state.sites() != 2) {
        throw InvalidArgumentError("reduced_density needs a bipartite state (l = 2), got l = " +
                                   std::to_string(state.sites()));
    }
    const int n = state.levels();
    // digits [a, b] -> flat a + b*n
    auto m = [&](int a, int b) { return state[static_cast<std::size_t>(a + b * n)]; };
    HermitianMatrix rho(n);
    for (int r = 0; r < n; ++r) {
        for (int c = r; c < n; ++c) {
            Complex acc{};
            for (int b = 0; b < n; ++b) acc += m(r, b) * std::conj(m(c, b));
            rho(r, c) = acc;
            rho(c, r) = std::conj(acc);
        }
        rho(r, r) = rho(r, r).real();
    }
    return rho;
}

namespace {

// A <- J^dagger A J, where J = diag(1, conj(phase)) composed with a real
// rotation by theta in the (p, q) plane, chosen so that (J^dagger A J)_pq = 0.
void annihilate(HermitianMatrix& a, int p, int q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const Complex phase = apq / g;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * g, app - aqq);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    // Columns of J restricted to (p, q): jp = (c, s*conj(phase)), jq = (-s, c*conj(phase)).
    const Complex jpp = c, jqp = s * std::conj(phase);
    const Complex jpq = -s, jqq = c * std::conj(phase);
    const int dim = a.dim();
    for (int r = 0; r < dim; ++r) {  // A <- A J
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = arp * jpp + arq * jqp;
        a(r, q) = arp * jpq + arq * jqq;
    }
    for (int col = 0; col < dim; ++col) {  // A <- J^dagger A
        const Complex apc = a(p, col);
        const Complex aqc = a(q, col);
        a(p, col) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
        a(q, col) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenResult jacobi_eigenvalues(HermitianMatrix a) {
    const int dim = a.dim();
    EigenResult out;
    out.off_diagonal_residual = a.off_diagonal_norm();
    while (out.off_diagonal_residual >= kSweepTolerance && out.sweeps < kMaxSweeps) {
        for (int p = 0; p < dim - 1; ++p) {
            for (int q = p + 1; q < dim; ++q) annihilate(a, p, q);
        }
        ++out.sweeps;
        out.off_diagonal_residual = a.off_diagonal_norm();
    }
    if (out.off_diagonal_residual >= kFailureTolerance) {
        throw OracleFailureError("Jacobi sweeps stalled at off-diagonal norm " +
                                 std::to_string(out.off_diagonal_residual));
    }
    out.eigenvalues.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i).real();
    return out;
}

SpectralResult schmidt_coefficients(const PureState& state) {
    const EigenResult eig = jacobi_eigenvalues(reduced_density(state));
    SpectralResult out;
    out.off_diagonal_residual = eig.off_diagonal_residual;
    out.schmidt_coefficients.reserve(eig.eigenvalues.size());
    for (double lambda : eig.eigenvalues) out.schmidt_coefficients.push_back(std::sqrt(std::max(lambda, 0.0)));
    std::sort(out.schmidt_coefficients.begin(), out.schmidt_coefficients.end(), std::greater<>());
    return out;
}

}  // namespace lureduce::spectral
