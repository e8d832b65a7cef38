#pragma once

#include <vector>

#include "lureduce/state.hpp"

// Schmidt coefficients of bipartite states through the eigenvalues of the
// reduced density matrix. Shares no code with the reduction path.
namespace lureduce::spectral {

/// Dense square complex matrix, row-major.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * dim_ + c];
    }

    Complex trace() const;
    // sqrt(sum_{r != c} |a_rc|^2)
    double off_diagonal_norm() const;
    // max_rc |a_rc - conj(a_cr)|
    double hermiticity_defect() const;

private:
    int dim_;
    std::vector<Complex> data_;
};

struct EigenResult {
    std::vector<double> eigenvalues;  // unsorted, diagonal order
    double off_diagonal_residual = 0.0;
    int sweeps = 0;
};

struct SpectralResult {
    std::vector<double> schmidt_coefficients;  // descending, nonnegative
    double off_diagonal_residual = 0.0;
};

inline constexpr double kSweepTolerance = 1e-14;
inline constexpr double kFailureTolerance = 1e-12;
inline constexpr int kMaxSweeps = 100;

/// rho = M M^dagger with M[a][b] = amplitude at digits [a, b]. Requires l = 2.
HermitianMatrix reduced_density(const PureState& state);

/// Cyclic-by-rows Jacobi diagonalization of a Hermitian matrix. Throws
/// OracleFailureError if the off-diagonal norm is still >= kFailureTolerance
/// after kMaxSweeps sweeps.
EigenResult jacobi_eigenvalues(HermitianMatrix a);

SpectralResult schmidt_coefficients(const PureState& state);

}  // namespace lureduce::spectral
