#include "qsl/matrix.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace qsl {

ComplexMatrix EigenSystem::reconstruct() const {
    return vectors * values.asDiagonal() * vectors.adjoint();
}

double max_abs(const ComplexMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - ComplexMatrix(m.adjoint())) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

EigenSystem eigh(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("eigh: matrix is not square");
    if (!m.allFinite())
        throw NonFiniteInput("eigh: non-finite entries");
    if (!is_hermitian(m, herm_tol))
        throw NonHermitianInput("eigh: input deviates from Hermitian beyond herm_tol");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
    if (solver.info() != Eigen::Success)
        throw Error("eigh: eigensolver failed to converge");
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const ComplexMatrix& x) {
    if (!x.allFinite())
        throw NonFiniteInput("trace_norm: non-finite entries");
    Eigen::JacobiSVD<ComplexMatrix> svd(x);
    return 0.5 * svd.singularValues().sum();
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw DimensionMismatch("trace_distance: dimension mismatch");
    return trace_norm(rho - sigma);
}

ComplexMatrix log_on_support(const ComplexMatrix& rho, double p_floor) {
    EigenSystem eig = eigh(rho);
    RealVector logp(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        logp[i] = std::log(std::max(eig.values[i], p_floor));
    return eig.vectors * logp.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("commutator: dimension mismatch");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("anticommutator: dimension mismatch");
    return a * b + b * a;
}

EigenSystem refine_degenerate_basis(const EigenSystem& eig, const ComplexMatrix& m,
                                    double cluster_tol) {
    const int d = eig.dim();
    EigenSystem out = eig;
    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && eig.values[end] - eig.values[end - 1] < cluster_tol) ++end;
        const int k = end - start;
        if (k > 1) {
            ComplexMatrix vc = out.vectors.middleCols(start, k);
            ComplexMatrix block = vc.adjoint() * m * vc;
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(block));
            out.vectors.middleCols(start, k) = vc * solver.eigenvectors();
        }
        start = end;
    }
    return out;
}

} // namespace qsl
