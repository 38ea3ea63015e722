#include "laprat/linalg.hpp"

#include <stdexcept>

namespace laprat {

LstsqResult lstsq(const DenseMatrix& A, const ComplexVector& b) {
    if (A.rows() < A.cols() || A.cols() < 1)
        throw std::invalid_argument("lstsq: need rows >= cols >= 1");
    if (A.rows() != b.size()) throw std::invalid_argument("lstsq: size mismatch");
    Eigen::CompleteOrthogonalDecomposition<DenseMatrix> cod(A);
    LstsqResult out;
    out.coefficients = cod.solve(b);
    out.residual_norm = (A * out.coefficients - b).norm();
    out.rank_deficient = cod.rank() < A.cols();
    return out;
}

RealLstsqResult lstsq(const RealMatrix& A, const RealVector& b) {
    if (A.rows() < A.cols() || A.cols() < 1)
        throw std::invalid_argument("lstsq: need rows >= cols >= 1");
    if (A.rows() != b.size()) throw std::invalid_argument("lstsq: size mismatch");
    RealLstsqResult out;
    Eigen::HouseholderQR<RealMatrix> qr(A);
    const auto diag = qr.matrixQR().diagonal().head(A.cols());
    const double dmax = diag.cwiseAbs().maxCoeff();
    if (dmax > 0.0 && diag.cwiseAbs().minCoeff() > 1e-14 * dmax) {
        out.coefficients = qr.solve(b);
    } else {
        Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(A);
        out.coefficients = cod.solve(b);
        out.rank_deficient = cod.rank() < A.cols();
    }
    out.residual_norm = (A * out.coefficients - b).norm();
    return out;
}

ComplexVector min_singular_vector(const DenseMatrix& A) {
    if (A.rows() < A.cols()) throw std::invalid_argument("min_singular_vector: need rows >= cols");
    Eigen::JacobiSVD<DenseMatrix> svd(A, Eigen::ComputeThinV);
    ComplexVector v = svd.matrixV().col(A.cols() - 1);
    return v / v.norm();
}

std::vector<std::complex<double>> generalized_eig_arrowhead(
    const std::vector<std::complex<double>>& support,
    const std::vector<std::complex<double>>& weights) {
    using C = std::complex<double>;
    const int m = static_cast<int>(support.size());
    if (m != static_cast<int>(weights.size()))
        throw std::invalid_argument("generalized_eig_arrowhead: size mismatch");
    if (m < 1) throw std::invalid_argument("generalized_eig_arrowhead: empty support");
    double wmax = 0.0;
    for (const C& w : weights) wmax = std::max(wmax, std::abs(w));
    if (wmax == 0.0) throw std::invalid_argument("generalized_eig_arrowhead: weights all zero");
    if (m == 1) return {};

    DenseMatrix A = DenseMatrix::Zero(m + 1, m + 1);
    DenseMatrix B = DenseMatrix::Identity(m + 1, m + 1);
    B(0, 0) = 0.0;
    double smax = 0.0;
    C mean = 0.0;
    for (int j = 0; j < m; ++j) {
        A(0, j + 1) = weights[j];
        A(j + 1, 0) = 1.0;
        A(j + 1, j + 1) = support[j];
        smax = std::max(smax, std::abs(support[j]));
        mean += support[j];
    }
    mean /= static_cast<double>(m);
    const double spread = std::max(smax, 1e-12);

    // Shift-invert: mu = 1/(lambda - sigma) are ordinary eigenvalues of
    // (A - sigma B)^{-1} B; infinite lambda map to mu = 0.
    C sigma = mean + spread * C(0.6180339887, 0.7861513777);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::PartialPivLU<DenseMatrix> lu(A - sigma * B);
        const auto udiag = lu.matrixLU().diagonal().cwiseAbs();
        if (udiag.minCoeff() < 1e-14 * udiag.maxCoeff()) {
            sigma = mean + spread * C(0.31 + 0.17 * attempt, 1.13 + 0.29 * attempt);
            continue;
        }
        const DenseMatrix Cmat = lu.solve(B);
        if (!Cmat.allFinite()) {
            sigma = mean + spread * C(0.31 + 0.17 * attempt, 1.13 + 0.29 * attempt);
            continue;
        }
        Eigen::ComplexEigenSolver<DenseMatrix> es(Cmat, false);
        if (es.info() != Eigen::Success) {
            sigma = mean + spread * C(0.31 + 0.17 * attempt, 1.13 + 0.29 * attempt);
            continue;
        }
        std::vector<C> poles;
        for (int j = 0; j <= m; ++j) {
            const C mu = es.eigenvalues()(j);
            if (mu == C(0.0, 0.0)) continue;
            const C lam = sigma + 1.0 / mu;
            if (!std::isfinite(lam.real()) || !std::isfinite(lam.imag())) continue;
            if (std::abs(lam) > 1e13 * std::max(smax, 1e-30)) continue;
            poles.push_back(lam);
        }
        return poles;
    }
    throw std::runtime_error("generalized_eig_arrowhead: shifted pencil stayed singular");
}

}  // namespace laprat
