// Dense complex kernels used by the solvers: tall-skinny least squares,
// smallest-singular-vector extraction, and the barycentric pole eigenproblem.
#ifndef LAPRAT_LINALG_HPP
#define LAPRAT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace laprat {

using DenseMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

struct LstsqResult {
    ComplexVector coefficients;
    double residual_norm = 0.0;
    bool rank_deficient = false;
};

struct RealLstsqResult {
    RealVector coefficients;
    double residual_norm = 0.0;
    bool rank_deficient = false;
};

/// Minimizes ||A x - b||_2 by orthogonal factorization.  Requires
/// rows >= cols >= 1.  Rank-deficient systems (to machine precision) return
/// the minimum-norm solution with the flag set.
LstsqResult lstsq(const DenseMatrix& A, const ComplexVector& b);

/// Real variant used by the harmonic fits.  Plain Householder QR on the fast
/// path, falling back to a complete orthogonal decomposition when the
/// triangular factor signals rank deficiency.
RealLstsqResult lstsq(const RealMatrix& A, const RealVector& b);

/// Unit right singular vector of the smallest singular value.  rows >= cols.
ComplexVector min_singular_vector(const DenseMatrix& A);

/// Finite poles of the barycentric rational with the given support points and
/// weights: the finite eigenvalues of the (m+1)x(m+1) arrowhead generalized
/// eigenproblem, computed by shift-invert.  The spurious infinite eigenvalues
/// (and anything beyond 1e13 * max|support|) are discarded.
std::vector<std::complex<double>> generalized_eig_arrowhead(
    const std::vector<std::complex<double>>& support,
    const std::vector<std::complex<double>>& weights);

}  // namespace laprat

#endif
