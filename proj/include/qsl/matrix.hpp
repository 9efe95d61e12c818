#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qsl/errors.hpp"

namespace qsl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Result of a Hermitian eigendecomposition: M = V diag(values) V^dag,
/// eigenvalues ascending, eigenvectors as columns of a unitary V.
struct EigenSystem {
    RealVector values;
    ComplexMatrix vectors;

    int dim() const { return static_cast<int>(values.size()); }
    ComplexMatrix reconstruct() const;
};

/// Largest entry magnitude, max_{ij} |M_ij|.
double max_abs(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol);

/// (M + M^dag)/2
ComplexMatrix hermitize(const ComplexMatrix& m);

/// Hermitian eigendecomposition. Throws NonHermitianInput if the input
/// deviates from M = M^dag by more than herm_tol (max-abs sense).
EigenSystem eigh(const ComplexMatrix& m, double herm_tol = 1e-10);

/// Trace norm ||X|| = (1/2) Tr sqrt(X^dag X), i.e. half the sum of the
/// singular values. Note the factor 1/2: with it, orthogonal pure states
/// are at trace distance exactly 1.
double trace_norm(const ComplexMatrix& x);

/// T(rho, sigma) = ||rho - sigma||_tr, in [0,1] for density matrices.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// ln(rho) evaluated on the spectrum with eigenvalues below p_floor clamped
/// to p_floor. Zero-population directions then contribute 0 * ln(p_floor)
/// to traces against d(rho)/dt, matching the 0*ln(0) -> 0 convention.
ComplexMatrix log_on_support(const ComplexMatrix& rho, double p_floor = 1e-12);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re-diagonalize eig.vectors within clusters of near-equal eigenvalues so
/// that the cluster blocks of the Hermitian matrix m become diagonal.
/// Eigenvalues are untouched. Outside degenerate clusters this is the
/// identity operation. Used to pin down the otherwise arbitrary basis
/// choice inside degenerate subspaces.
EigenSystem refine_degenerate_basis(const EigenSystem& eig, const ComplexMatrix& m,
                                    double cluster_tol);

} // namespace qsl
