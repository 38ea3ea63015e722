// Polynomial Laplace solver: discretely orthonormal polynomial bases on
// boundary samples (Arnoldi/Stieltjes recurrence) and real least-squares fits
// of harmonic boundary data.
#ifndef LAPRAT_POLYSOLVER_HPP
#define LAPRAT_POLYSOLVER_HPP

#include <functional>
#include <vector>

#include "laprat/geometry.hpp"
#include "laprat/linalg.hpp"

namespace laprat {

using BoundaryFunction = std::function<double(Complex)>;

struct ArnoldiBasis {
    int degree = 0;          // may be capped below the request on breakdown
    DenseMatrix Q;           // M x (degree+1), columns orthonormal in (1/M) sum conj(u) v
    DenseMatrix H;           // (degree+1) x degree recurrence coefficients
    Complex center = 0.0;    // affine shift (node mean)
    double scale = 1.0;      // max node deviation from center
    bool truncated = false;  // set when the recurrence broke down early
};

/// Builds the orthonormal polynomial basis on the sample nodes by the
/// Gram-Schmidt/Arnoldi recurrence applied to multiplication by
/// (z - center)/scale.  Requires M >= 2(n+1).  A breakdown (new column norm
/// below 1e-14) caps the degree and sets the truncated flag.
ArnoldiBasis arnoldi_build(const BoundarySample& sample, int n);

/// Evaluates the same recurrence (via H) at arbitrary points; reproduces Q at
/// the construction nodes.
DenseMatrix arnoldi_eval(const ArnoldiBasis& basis, const std::vector<Complex>& points);

/// A real harmonic approximant u ~ c0 + sum a_j Re phi_j + sum b_j Im phi_j,
/// where the phi_j are the Arnoldi basis columns (j >= 1) followed by the
/// simple-pole functions 1/(z - pole_k).  boundary_error is the sup-norm
/// residual on a held-out validation grid.
struct HarmonicApproximant {
    ArnoldiBasis basis;
    std::vector<Complex> poles;   // empty for pure polynomial fits
    RealVector coefficients;      // [c0; a...; b...] over basis then poles
    double boundary_error = 0.0;
    double fit_residual = 0.0;    // 2-norm of the least-squares residual at the fit nodes
    bool rank_deficient = false;

    std::vector<double> evaluate(const std::vector<Complex>& points) const;
};

/// Fits h on the curve with an Arnoldi polynomial basis of degree n built on
/// M equispaced nodes, solving the stacked real least-squares system and
/// measuring the residual on 4M fresh nodes.
HarmonicApproximant fit_laplace_poly(const ParametricCurve& curve, const BoundaryFunction& h,
                                     int n, int M);

/// Shared core for the polynomial and rational fits: polynomial part of
/// degree npoly plus the given simple poles.
HarmonicApproximant fit_laplace_basis(const ParametricCurve& curve, const BoundaryFunction& h,
                                      int npoly, const std::vector<Complex>& pole_list, int M);

}  // namespace laprat

#endif
