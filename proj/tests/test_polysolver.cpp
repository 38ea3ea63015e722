#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "laprat/polysolver.hpp"

using namespace laprat;

namespace {

double orthonormality_defect(const ArnoldiBasis& basis) {
    const DenseMatrix G =
        basis.Q.adjoint() * basis.Q / static_cast<double>(basis.Q.rows());
    return (G - DenseMatrix::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
}

ParametricCurve unit_circle() { return ParametricCurve::parse("trig:0,0,1"); }

}  // namespace

TEST_SUITE("polysolver") {

TEST_CASE("circle basis reduces to monomials") {
    const BoundarySample s = sample_boundary(unit_circle(), 64);
    const ArnoldiBasis basis = arnoldi_build(s, 4);
    CHECK(std::abs(basis.center) < 1e-14);
    CHECK(basis.scale == doctest::Approx(1.0));
    CHECK(!basis.truncated);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(basis.H(j + 1, j) - 1.0) < 1e-12);
    for (int k = 0; k < s.count(); ++k)
        for (int j = 0; j <= 4; ++j)
            CHECK(std::abs(basis.Q(k, j) - std::pow(s.nodes[k], j)) < 1e-12);
}

TEST_CASE("degree zero basis is the unit constant") {
    const BoundarySample s = sample_boundary(ParametricCurve::ellipse(1.4), 32);
    const ArnoldiBasis basis = arnoldi_build(s, 0);
    CHECK(basis.Q.cols() == 1);
    CHECK((basis.Q.col(0).array() - Complex(1.0, 0.0)).abs().maxCoeff() < 1e-15);
    CHECK(orthonormality_defect(basis) < 1e-14);
}

TEST_CASE("orthonormality holds on randomized curves") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> rho_dist(1.1, 2.5);
    std::uniform_int_distribution<int> n_dist(1, 60);
    for (int t = 0; t < 50; ++t) {
        const double rho = rho_dist(rng);
        const int n = n_dist(rng);
        const auto curve = (t % 2) ? ParametricCurve::ellipse(rho)
                                   : ParametricCurve::inverted_ellipse(rho);
        const BoundarySample s = sample_boundary(curve, std::max(2 * (n + 1), 64));
        CHECK(orthonormality_defect(arnoldi_build(s, n)) < 1e-10);
    }
}

TEST_CASE("oversampling precondition") {
    const BoundarySample s = sample_boundary(unit_circle(), 16);
    CHECK_THROWS_AS(arnoldi_build(s, 8), std::invalid_argument);
    CHECK_THROWS_AS(arnoldi_build(s, -1), std::invalid_argument);
}

TEST_CASE("breakdown on degenerate nodes caps the degree") {
    BoundarySample s;
    for (int k = 0; k < 12; ++k) {
        s.params.push_back(0.1 * k);
        s.nodes.push_back(Complex(1.0, 0.0));
    }
    const ArnoldiBasis basis = arnoldi_build(s, 3);
    CHECK(basis.truncated);
    CHECK(basis.degree == 0);
}

TEST_CASE("evaluation reproduces the recurrence") {
    const auto curve = ParametricCurve::inverted_ellipse(1.6);
    const BoundarySample s = sample_boundary(curve, 200);
    const ArnoldiBasis basis = arnoldi_build(s, 20);

    const DenseMatrix back = arnoldi_eval(basis, s.nodes);
    CHECK((back - basis.Q).cwiseAbs().maxCoeff() < 1e-10);

    const DenseMatrix at = arnoldi_eval(basis, {Complex(0.1, 0.05), Complex(-0.2, 0.0)});
    CHECK(std::abs(at(0, 0) - basis.Q(0, 0)) < 1e-14);
    CHECK(std::abs(at(1, 0) - basis.Q(0, 0)) < 1e-14);

    const BoundarySample c = sample_boundary(unit_circle(), 64);
    const ArnoldiBasis cb = arnoldi_build(c, 6);
    const DenseMatrix v = arnoldi_eval(cb, {Complex(2.0, 0.0)});
    for (int j = 0; j <= 6; ++j) CHECK(std::abs(v(0, j) - std::pow(2.0, j)) < 1e-9 * std::pow(2.0, j));
}

TEST_CASE("exact harmonic data is reproduced") {
    const HarmonicApproximant fx =
        fit_laplace_poly(unit_circle(), [](Complex z) { return z.real(); }, 1, 64);
    CHECK(fx.boundary_error < 1e-12);

    const auto ell = ParametricCurve::ellipse(1.5);
    const auto h3 = [](Complex z) { return std::pow(z, 3).real() + 2.0; };
    const HarmonicApproximant f3 = fit_laplace_poly(ell, h3, 3, 200);
    CHECK(f3.boundary_error < 1e-10);

    // the error of the fit is itself harmonic, so it peaks on the boundary
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> t_dist(0.0, 1.0);
    std::uniform_real_distribution<double> th_dist(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> inside;
    for (int k = 0; k < 500; ++k) inside.push_back(t_dist(rng) * ell.point(th_dist(rng)));
    const std::vector<double> u = f3.evaluate(inside);
    for (int k = 0; k < 500; ++k)
        CHECK(std::abs(u[k] - h3(inside[k])) <= f3.boundary_error + 1e-12);
}

TEST_CASE("constant data gives the constant solution") {
    const auto curve = ParametricCurve::inverted_ellipse(1.4);
    const HarmonicApproximant fit =
        fit_laplace_poly(curve, [](Complex) { return 5.0; }, 0, 100);
    CHECK(fit.boundary_error < 1e-12);
    const std::vector<double> u =
        fit.evaluate({Complex(0.0, 0.0), Complex(0.3, 0.2), Complex(-0.5, 0.1)});
    for (double v : u) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("boundary error is recomputable and non-increasing in degree") {
    const auto curve = ParametricCurve::inverted_ellipse(1.8);
    const auto h = [](Complex z) { return (z.imag() + 1.0) * (z.imag() + 1.0); };
    double prev = 1e300;
    for (int n : {10, 20, 30, 40}) {
        const HarmonicApproximant fit = fit_laplace_poly(curve, h, n, 400);
        // recompute the sup residual on the same held-out grid
        const int V = 4 * 400;
        std::vector<Complex> vnodes(V);
        for (int k = 0; k < V; ++k)
            vnodes[k] = curve.point(2.0 * std::numbers::pi * (k + 0.5) / V);
        const std::vector<double> u = fit.evaluate(vnodes);
        double err = 0.0;
        for (int k = 0; k < V; ++k) err = std::max(err, std::abs(u[k] - h(vnodes[k])));
        CHECK(std::abs(err - fit.boundary_error) < 1e-12);

        CHECK(fit.boundary_error <= prev + 1e-13);
        prev = fit.boundary_error;
    }
}

}  // TEST_SUITE
