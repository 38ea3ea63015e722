// Numerical Schwarz-function analysis: AAA approximation of S(z) = conj(z)
// on the boundary, branch-point estimation from pole clustering, and
// reflection-identity checks.
#ifndef LAPRAT_SCHWARZ_HPP
#define LAPRAT_SCHWARZ_HPP

#include <vector>

#include "laprat/aaa.hpp"
#include "laprat/geometry.hpp"
#include "laprat/polysolver.hpp"

namespace laprat {

enum class CurveSide { interior, exterior };

struct BranchEstimate {
    Complex location;
    CurveSide side = CurveSide::exterior;
};

struct SchwarzApprox {
    BarycentricRational rational;          // AAA fit of conj(Z) on Z
    std::vector<Complex> exterior_poles;   // winding-number partition
    std::vector<Complex> interior_poles;
    std::vector<BranchEstimate> branch_estimates;  // one per pole string
};

/// AAA approximation of the Schwarz function on M boundary samples, with the
/// poles partitioned by the winding test and clustered into strings
/// (single linkage at 3x the median nearest-neighbor spacing; strings of
/// fewer than 3 poles ignored).  Each string's pole nearest the curve is
/// reported as a branch-point estimate.  Requires M >= 500.
SchwarzApprox schwarz_fit(const ParametricCurve& curve, int M, double tol);

/// |conj(S(conj(S(z)))) - z| for the exact Schwarz function of the ellipse
/// family.  z must lie within 0.05*(rho-1) of the curve; farther points are
/// refused since the identity is only guaranteed near the boundary.
double reflection_check(const ParametricCurve& curve, Complex z);

struct ContinuationWitness {
    Complex a1;       // reflections of a cut point under the two branches
    Complex a2;
    double delta_u = 0.0;  // |u(a1) - u(a2)| for a high-accuracy solve
};

/// Picks b on the Schwarz cut just beyond the branch point z = 1 of an
/// inverted ellipse, reflects it through both branches, and compares the
/// numerical solution u at the two images.  A nonzero gap witnesses that the
/// analytic completion of u cannot continue past z = 1 for this data.
ContinuationWitness continuation_violation_witness(const ParametricCurve& curve,
                                                   const BoundaryFunction& h, double b = 1.05);

}  // namespace laprat

#endif
