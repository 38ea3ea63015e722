// Greedy barycentric rational approximation (AAA): fit, evaluation, and pole
// extraction.
#ifndef LAPRAT_AAA_HPP
#define LAPRAT_AAA_HPP

#include <vector>

#include "laprat/geometry.hpp"

namespace laprat {

struct BarycentricRational {
    std::vector<Complex> support;  // z_j
    std::vector<Complex> values;   // f_j, interpolated at support points
    std::vector<Complex> weights;  // unit 2-norm
    double tol_achieved = 0.0;     // final max residual relative to max|F|
    std::vector<double> history;   // per-iteration max absolute residual

    int degree() const { return static_cast<int>(support.size()) - 1; }
};

/// Greedy AAA fit of data F on the point set Z: each step moves the point of
/// largest residual into the support set and recomputes the weights as the
/// smallest singular vector of the Loewner matrix on the remaining points.
/// Stops when the max residual drops below tol * max|F| or the degree reaches
/// mmax; an unconverged fit is returned with tol_achieved > tol rather than
/// throwing.  Requires |Z| = |F| >= 2, Z pairwise distinct, tol > 0.
BarycentricRational aaa_fit(const std::vector<Complex>& Z, const std::vector<Complex>& F,
                            double tol, int mmax = 200);

/// Barycentric evaluation; points matching a support point (within 1e-15
/// relative) return the interpolated value f_j.  Evaluation at a pole may
/// return an infinite value but never traps.
std::vector<Complex> eval_barycentric(const BarycentricRational& r,
                                      const std::vector<Complex>& points);

Complex eval_barycentric(const BarycentricRational& r, Complex z);

/// Finite poles of r via the arrowhead generalized eigenproblem.
/// Requires at least two support points.
std::vector<Complex> poles(const BarycentricRational& r);

/// The interpolant the greedy loop would have produced after its first m
/// support points, with weights recomputed for that truncated support set.
/// Used by degree sweeps that need one nested family of rationals.
/// Requires 1 <= m <= r.support.size().
BarycentricRational prefix_interpolant(const BarycentricRational& r,
                                       const std::vector<Complex>& Z,
                                       const std::vector<Complex>& F, int m);

}  // namespace laprat

#endif
