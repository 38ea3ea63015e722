#include <doctest.h>

#include <cmath>

#include "laprat/harness.hpp"
#include "laprat/ratsolver.hpp"

using namespace laprat;

namespace {

double distance_to_cut(Complex p) {
    // distance to [1, oo) u (-oo, -1]
    const double x = std::abs(p.real()), y = std::abs(p.imag());
    return x >= 1.0 ? y : std::min(std::abs(p - Complex(1.0, 0.0)),
                                   std::abs(p + Complex(1.0, 0.0)));
}

const auto h_paper = [](Complex z) { return (z.imag() + 1.0) * (z.imag() + 1.0); };

}  // namespace

TEST_SUITE("ratsolver") {

TEST_CASE("branch-cut ladder construction") {
    const auto curve = ParametricCurve::inverted_ellipse(1.5);
    const BoundarySample s = sample_boundary(curve, 500);
    const PoleBasis basis =
        select_poles(curve, s, h_paper, 1e-10, PoleSource::exact_branch_cut, 10);
    REQUIRE(basis.poles.size() == 20);
    for (const Complex& p : basis.poles) {
        CHECK(p.imag() == 0.0);
        CHECK(std::abs(p.real()) >= 1.0);
        // negation symmetry
        bool found = false;
        for (const Complex& q : basis.poles)
            if (std::abs(q + p) < 1e-15) found = true;
        CHECK(found);
    }
    CHECK_THROWS_AS(select_poles(ParametricCurve::ellipse(1.5), s, h_paper, 1e-10,
                                 PoleSource::exact_branch_cut, 10),
                    std::invalid_argument);
}

TEST_CASE("Schwarz-derived poles hug the branch cuts") {
    const auto curve = ParametricCurve::inverted_ellipse(1.3);
    const BoundarySample s = sample_boundary(curve, 2000);
    const PoleBasis basis = select_poles(curve, s, h_paper, 1e-10, PoleSource::from_schwarz);
    REQUIRE(basis.poles.size() >= 10);
    int near = 0;
    for (const Complex& p : basis.poles) {
        CHECK(!winding_inside(s.nodes, p));
        if (distance_to_cut(p) < 0.3) ++near;
    }
    CHECK(near >= static_cast<int>(0.8 * basis.poles.size()));
}

TEST_CASE("entire data on the circle yields no nearby poles") {
    const auto circle = ParametricCurve::parse("trig:0,0,1");
    const BoundarySample s = sample_boundary(circle, 512);
    const PoleBasis basis = select_poles(
        circle, s, [](Complex z) { return z.real(); }, 1e-12, PoleSource::from_data);
    for (const Complex& p : basis.poles) CHECK(std::abs(p) > 5.0);
}

TEST_CASE("empty pole basis reduces to the polynomial fit") {
    const auto curve = ParametricCurve::inverted_ellipse(1.6);
    PoleBasis empty;
    const HarmonicApproximant rat = fit_laplace_rational(curve, h_paper, empty, 15, 300);
    const HarmonicApproximant pol = fit_laplace_poly(curve, h_paper, 15, 300);
    REQUIRE(rat.coefficients.size() == pol.coefficients.size());
    CHECK((rat.coefficients - pol.coefficients).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("a single exact pole reproduces its own field") {
    const auto circle = ParametricCurve::parse("trig:0,0,1");
    const auto h = [](Complex z) { return (1.0 / (z - 2.0)).real(); };
    PoleBasis basis;
    basis.poles = {Complex(2.0, 0.0)};
    const HarmonicApproximant fit = fit_laplace_rational(circle, h, basis, 0, 200);
    CHECK(fit.boundary_error < 1e-11);
}

TEST_CASE("adding poles never hurts the least-squares residual") {
    const auto curve = ParametricCurve::inverted_ellipse(1.4);
    const BoundarySample s = sample_boundary(curve, 800);
    double prev = 1e300;
    for (int nside : {1, 3, 6, 10}) {
        const PoleBasis basis =
            select_poles(curve, s, h_paper, 1e-10, PoleSource::exact_branch_cut, nside);
        const HarmonicApproximant fit = fit_laplace_rational(curve, h_paper, basis, 10, 800);
        CHECK(fit.fit_residual <= prev + 1e-13);
        prev = fit.fit_residual;
    }
}

TEST_CASE("branch-cut ladder sweep improves steadily but stalls short of 1e-8") {
    const auto curve = ParametricCurve::inverted_ellipse(1.3);
    const BoundarySample s = sample_boundary(curve, 1500);
    double best = 1e300;
    for (int nside : {5, 15, 25}) {
        const PoleBasis basis =
            select_poles(curve, s, h_paper, 1e-10, PoleSource::exact_branch_cut, nside);
        const HarmonicApproximant fit = fit_laplace_rational(curve, h_paper, basis, 10, 1500);
        best = std::min(best, fit.boundary_error);
    }
    CHECK(best < 0.1);
}

TEST_CASE("rational sweeps track the rho^-2n rate") {
    for (double rho : {1.3, 1.8}) {
        ExperimentConfig config;
        config.curve = "iell:" + std::to_string(rho);
        config.method = SweepMethod::rational;
        config.pole_source = PoleSource::from_schwarz;
        config.M = 1500;
        config.degrees = rho < 1.5 ? std::vector<int>{14, 22, 30, 38, 46, 54, 62}
                                   : std::vector<int>{12, 16, 20, 24, 28, 32};
        const ConvergenceRecord rec = run_sweep(config);
        REQUIRE(rec.rate_defined);
        // observed decay at least 0.75x the theoretical exponent
        CHECK(-std::log(rec.fitted_rate) >= 0.75 * 2.0 * std::log(rho));
    }
}

}  // TEST_SUITE
