#include "laprat/polysolver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laprat {

ArnoldiBasis arnoldi_build(const BoundarySample& sample, int n) {
    const int M = sample.count();
    if (n < 0) throw std::invalid_argument("arnoldi_build: n must be >= 0");
    if (M < 2 * (n + 1)) throw std::invalid_argument("arnoldi_build: need M >= 2(n+1)");

    ArnoldiBasis basis;
    basis.degree = n;
    Complex center = 0.0;
    for (const Complex& z : sample.nodes) center += z;
    center /= static_cast<double>(M);
    double scale = 0.0;
    for (const Complex& z : sample.nodes) scale = std::max(scale, std::abs(z - center));
    if (scale == 0.0) scale = 1.0;
    basis.center = center;
    basis.scale = scale;

    ComplexVector w(M);
    for (int k = 0; k < M; ++k) w(k) = (sample.nodes[k] - center) / scale;

    basis.Q = DenseMatrix(M, n + 1);
    basis.H = DenseMatrix::Zero(n + 1, n);
    basis.Q.col(0).setOnes();

    const double invM = 1.0 / M;
    for (int j = 0; j < n; ++j) {
        ComplexVector v = w.cwiseProduct(basis.Q.col(j));
        // classical Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            const ComplexVector proj = invM * (basis.Q.leftCols(j + 1).adjoint() * v);
            v -= basis.Q.leftCols(j + 1) * proj;
            basis.H.col(j).head(j + 1) += proj;
        }
        const double norm = v.norm() * std::sqrt(invM);
        if (norm < 1e-14) {
            basis.degree = j;
            basis.truncated = true;
            basis.Q.conservativeResize(M, j + 1);
            basis.H.conservativeResize(j + 1, j);
            break;
        }
        basis.H(j + 1, j) = norm;
        basis.Q.col(j + 1) = v / norm;
    }
    return basis;
}

DenseMatrix arnoldi_eval(const ArnoldiBasis& basis, const std::vector<Complex>& points) {
    const int P = static_cast<int>(points.size());
    const int n = basis.degree;
    DenseMatrix A(P, n + 1);
    A.col(0).setOnes();
    ComplexVector w(P);
    for (int k = 0; k < P; ++k) w(k) = (points[k] - basis.center) / basis.scale;
    for (int j = 0; j < n; ++j) {
        ComplexVector v = w.cwiseProduct(A.col(j));
        v -= A.leftCols(j + 1) * basis.H.col(j).head(j + 1);
        A.col(j + 1) = v / basis.H(j + 1, j);
    }
    return A;
}

namespace {

// Real design matrix: [1 | Re q_1..q_n | Re 1/(z-p_k) | -Im q_1..q_n | -Im 1/(z-p_k)],
// matching the coefficient packing [c0; a...; b...].
RealMatrix real_features(const ArnoldiBasis& basis, const std::vector<Complex>& pole_list,
                         const std::vector<Complex>& points) {
    const int P = static_cast<int>(points.size());
    const int n = basis.degree;
    const int np = static_cast<int>(pole_list.size());
    const DenseMatrix A = arnoldi_eval(basis, points);
    DenseMatrix poleCols(P, np);
    for (int j = 0; j < np; ++j)
        for (int i = 0; i < P; ++i) poleCols(i, j) = 1.0 / (points[i] - pole_list[j]);

    RealMatrix X(P, 1 + 2 * (n + np));
    X.col(0).setOnes();
    X.block(0, 1, P, n) = A.rightCols(n).real();
    X.block(0, 1 + n, P, np) = poleCols.real();
    X.block(0, 1 + n + np, P, n) = -A.rightCols(n).imag();
    X.block(0, 1 + 2 * n + np, P, np) = -poleCols.imag();
    return X;
}

}  // namespace

std::vector<double> HarmonicApproximant::evaluate(const std::vector<Complex>& points) const {
    const RealMatrix X = real_features(basis, poles, points);
    const RealVector u = X * coefficients;
    return {u.data(), u.data() + u.size()};
}

HarmonicApproximant fit_laplace_basis(const ParametricCurve& curve, const BoundaryFunction& h,
                                      int npoly, const std::vector<Complex>& pole_list, int M) {
    const BoundarySample sample = sample_boundary(curve, M);
    HarmonicApproximant approx;
    approx.basis = arnoldi_build(sample, npoly);
    approx.poles = pole_list;

    const RealMatrix X = real_features(approx.basis, pole_list, sample.nodes);
    RealVector rhs(M);
    for (int k = 0; k < M; ++k) rhs(k) = h(sample.nodes[k]);
    const RealLstsqResult sol = lstsq(X, rhs);
    approx.coefficients = sol.coefficients;
    approx.fit_residual = sol.residual_norm;
    approx.rank_deficient = sol.rank_deficient;

    // held-out validation grid, offset between the fit nodes
    const int V = 4 * M;
    std::vector<Complex> vnodes(V);
    for (int k = 0; k < V; ++k)
        vnodes[k] = curve.point(2.0 * std::numbers::pi * (k + 0.5) / V);
    const std::vector<double> u = approx.evaluate(vnodes);
    double err = 0.0;
    for (int k = 0; k < V; ++k) err = std::max(err, std::abs(u[k] - h(vnodes[k])));
    approx.boundary_error = err;
    return approx;
}

HarmonicApproximant fit_laplace_poly(const ParametricCurve& curve, const BoundaryFunction& h,
                                     int n, int M) {
    return fit_laplace_basis(curve, h, n, {}, M);
}

}  // namespace laprat
