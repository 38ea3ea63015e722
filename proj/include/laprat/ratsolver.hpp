// Rational Laplace solver: candidate pole selection (AAA on boundary data or
// on conj(Z), or an exact branch-cut ladder) and least-squares fits in a
// polynomial-plus-poles basis.
#ifndef LAPRAT_RATSOLVER_HPP
#define LAPRAT_RATSOLVER_HPP

#include <vector>

#include "laprat/geometry.hpp"
#include "laprat/polysolver.hpp"

namespace laprat {

enum class PoleSource { from_data, from_schwarz, exact_branch_cut };

struct PoleBasis {
    std::vector<Complex> poles;  // all exterior to the curve
    PoleSource source = PoleSource::from_schwarz;
    bool all_discarded = false;  // every candidate was interior
};

/// Candidate poles for the rational fit.  from_data runs AAA on (Z, h(Z));
/// from_schwarz runs AAA on (Z, conj(Z)); exact_branch_cut (inverted ellipse
/// only) places n points on each of [1,oo) and (-oo,-1] at
/// +-(1 + d e^{-sigma k/sqrt(n)}), sigma = 4, d = 1.  Poles with nonzero
/// winding number (inside the curve) are discarded; if none survive the basis
/// is empty and flagged.
PoleBasis select_poles(const ParametricCurve& curve, const BoundarySample& sample,
                       const BoundaryFunction& h, double tol, PoleSource source, int n = 40);

/// Real least-squares fit of h in the basis [polynomial of degree npoly] +
/// [1/(z - pole)].  Total rational degree is npoly + #poles; boundary_error
/// measured as in fit_laplace_poly.
HarmonicApproximant fit_laplace_rational(const ParametricCurve& curve, const BoundaryFunction& h,
                                         const PoleBasis& basis, int npoly, int M);

/// Drops the poles of `candidates` that the sampled boundary polygon encloses.
std::vector<Complex> discard_interior_poles(const std::vector<Complex>& candidates,
                                            const BoundarySample& sample);

}  // namespace laprat

#endif
