#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "laprat/linalg.hpp"

using namespace laprat;
using C = std::complex<double>;

namespace {
DenseMatrix random_complex(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    DenseMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A(i, j) = C(g(rng), g(rng));
    return A;
}
}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("lstsq on identity and mean systems") {
    DenseMatrix I = DenseMatrix::Identity(3, 3);
    ComplexVector b(3);
    b << C(1, 0), C(0, 2), C(-1, 0);
    const LstsqResult r = lstsq(I, b);
    CHECK((r.coefficients - b).norm() < 1e-14);
    CHECK(r.residual_norm < 1e-14);
    CHECK(!r.rank_deficient);

    DenseMatrix ones(2, 1);
    ones << 1.0, 1.0;
    ComplexVector b2(2);
    b2 << 0.0, 2.0;
    const LstsqResult r2 = lstsq(ones, b2);
    CHECK(std::abs(r2.coefficients(0) - C(1.0, 0.0)) < 1e-14);
    CHECK(r2.residual_norm == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("lstsq normal-equation residual on random tall systems") {
    const DenseMatrix A = random_complex(200, 50, 17);
    const ComplexVector b = random_complex(200, 1, 18).col(0);
    const LstsqResult r = lstsq(A, b);
    const ComplexVector grad = A.adjoint() * (A * r.coefficients - b);
    CHECK(grad.norm() / (A.adjoint() * b).norm() < 1e-10);
}

TEST_CASE("lstsq is exact on square nonsingular systems") {
    const DenseMatrix A = random_complex(20, 20, 23) + 5.0 * DenseMatrix::Identity(20, 20);
    const ComplexVector x = random_complex(20, 1, 24).col(0);
    const LstsqResult r = lstsq(A, A * x);
    CHECK((r.coefficients - x).norm() / x.norm() < 1e-12);
}

TEST_CASE("lstsq flags rank deficiency and returns the minimum-norm solution") {
    DenseMatrix A(4, 2);
    A.col(0) << 1.0, 1.0, 1.0, 1.0;
    A.col(1) = 2.0 * A.col(0);
    ComplexVector b(4);
    b << 5.0, 5.0, 5.0, 5.0;
    const LstsqResult r = lstsq(A, b);
    CHECK(r.rank_deficient);
    CHECK(r.residual_norm < 1e-12);

    CHECK_THROWS_AS(lstsq(DenseMatrix(2, 3), ComplexVector(2)), std::invalid_argument);
}

TEST_CASE("real lstsq matches the complex path") {
    std::mt19937 rng(31);
    std::normal_distribution<double> g;
    RealMatrix A(60, 7);
    RealVector b(60);
    for (int i = 0; i < 60; ++i) {
        b(i) = g(rng);
        for (int j = 0; j < 7; ++j) A(i, j) = g(rng);
    }
    const RealLstsqResult r = lstsq(A, b);
    const RealVector grad = A.transpose() * (A * r.coefficients - b);
    CHECK(grad.norm() / (A.transpose() * b).norm() < 1e-10);
    CHECK(std::abs(r.residual_norm - (A * r.coefficients - b).norm()) < 1e-12);
}

TEST_CASE("min singular vector basics") {
    DenseMatrix D = DenseMatrix::Zero(3, 3);
    D(0, 0) = 3.0;
    D(1, 1) = 2.0;
    D(2, 2) = 1.0;
    const ComplexVector v = min_singular_vector(D);
    CHECK(std::abs(std::abs(v(2)) - 1.0) < 1e-14);
    CHECK(std::abs(v.norm() - 1.0) < 1e-14);

    // matrix with an exact null vector
    DenseMatrix A = random_complex(10, 4, 41);
    A.col(3) = A.col(0) + A.col(1);
    const ComplexVector n = min_singular_vector(A);
    CHECK((A * n).norm() < 1e-13);
}

TEST_CASE("min singular vector minimizes over random directions") {
    const DenseMatrix A = random_complex(40, 10, 43);
    const ComplexVector v = min_singular_vector(A);
    const double best = (A * v).norm();
    std::mt19937 rng(44);
    std::normal_distribution<double> g;
    for (int t = 0; t < 100; ++t) {
        ComplexVector u(10);
        for (int j = 0; j < 10; ++j) u(j) = C(g(rng), g(rng));
        u /= u.norm();
        CHECK(best <= (A * u).norm() + 1e-12);
    }
}

TEST_CASE("arrowhead pole finder on hand cases") {
    const auto z0 = generalized_eig_arrowhead({C(-1, 0), C(1, 0)}, {C(1, 0), C(1, 0)});
    REQUIRE(z0.size() == 1);
    CHECK(std::abs(z0[0]) < 1e-12);

    // denominator 1/(z+1) - 1/(z-1) has no finite zero
    const auto none = generalized_eig_arrowhead({C(-1, 0), C(1, 0)}, {C(1, 0), C(-1, 0)});
    CHECK(none.empty());

    CHECK(generalized_eig_arrowhead({C(2, 0)}, {C(1, 0)}).empty());
    CHECK_THROWS_AS(generalized_eig_arrowhead({C(1, 0), C(2, 0)}, {C(0, 0), C(0, 0)}),
                    std::invalid_argument);
}

TEST_CASE("arrowhead poles zero the barycentric denominator") {
    std::mt19937 rng(53);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<C> support(6), weights(6);
        double wmax = 0.0;
        for (int j = 0; j < 6; ++j) {
            support[j] = C(g(rng), g(rng));
            weights[j] = C(g(rng), g(rng));
            wmax = std::max(wmax, std::abs(weights[j]));
        }
        const auto ps = generalized_eig_arrowhead(support, weights);
        CHECK(ps.size() <= 5);
        for (const C& p : ps) {
            C denom = 0.0;
            double dist = 1e300;
            for (int j = 0; j < 6; ++j) {
                denom += weights[j] / (p - support[j]);
                dist = std::min(dist, std::abs(p - support[j]));
            }
            CHECK(std::abs(denom) < 1e-8 * wmax / dist);
        }
    }
}

}  // TEST_SUITE
