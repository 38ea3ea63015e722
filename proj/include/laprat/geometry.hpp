// Curve families (ellipse, inverted ellipse, trigonometric perturbations of
// the circle), boundary sampling, the Joukowsky map, and the exact Schwarz
// functions of the ellipse family with their known singularities.
#ifndef LAPRAT_GEOMETRY_HPP
#define LAPRAT_GEOMETRY_HPP

#include <complex>
#include <string>
#include <vector>

namespace laprat {

using Complex = std::complex<double>;

enum class CurveKind { Ellipse, InvertedEllipse, Trig };

/// The Joukowsky map J(w) = (w + 1/w)/2.  Throws std::domain_error at w = 0.
Complex joukowsky(Complex w);

/// An analytic Jordan curve given by a 2*pi-periodic boundary parameterization.
///
/// Ellipse(rho):          z(theta) = J(rho e^{i theta}),  rho > 1
/// InvertedEllipse(rho):  z(theta) = 1 / J(rho e^{i theta})
/// Trig(c):               z(theta) = sum_{k=-K..K} c_k e^{i k theta}
///
/// Injectivity and a nonvanishing derivative are checked numerically on a
/// fine grid at construction; invalid curves throw std::invalid_argument.
class ParametricCurve {
public:
    static ParametricCurve ellipse(double rho);
    static ParametricCurve inverted_ellipse(double rho);
    /// Centered coefficient list c_{-K}..c_{K}; size must be odd.
    static ParametricCurve trig(std::vector<Complex> coeffs);

    /// Parses "ell:RHO", "iell:RHO", or "trig:c-K,...,cK" (complex entries
    /// written as a+bi).
    static ParametricCurve parse(const std::string& spec);

    CurveKind kind() const { return kind_; }
    double rho() const;
    const std::vector<Complex>& trig_coeffs() const { return coeffs_; }

    Complex point(double theta) const;
    Complex derivative(double theta) const;  // dz/dtheta

    std::string spec_string() const;

private:
    ParametricCurve(CurveKind kind, double rho, std::vector<Complex> coeffs);
    void validate() const;

    CurveKind kind_;
    double rho_ = 0.0;
    std::vector<Complex> coeffs_;  // trig only
};

/// Boundary nodes at strictly increasing parameter values in [0, 2*pi).
struct BoundarySample {
    std::vector<Complex> nodes;
    std::vector<double> params;
    int count() const { return static_cast<int>(nodes.size()); }
};

struct SchwarzSingularities {
    std::vector<Complex> branch_points;
    std::vector<Complex> interior_poles;
};

/// Equispaced-in-theta sampling, theta_k = 2*pi*k/M.  Requires M >= 8.
BoundarySample sample_boundary(const ParametricCurve& curve, int M);

/// Exact Schwarz function of the ellipse family: S(z) = conj(z) on the curve.
/// The square-root branch is z*sqrt(1 - z^{-2}) (principal root), analytic
/// off [-1,1]; for the inverted ellipse S(z) = 1/S_E(1/z), with the cut on
/// the real rays |Re z| >= 1.  Throws std::domain_error on the cut or at a
/// pole of S, std::invalid_argument for trig curves.
Complex schwarz_exact(const ParametricCurve& curve, Complex z);

/// The two local branches of the Schwarz function across its cut, evaluated
/// with the +/- determinations of the square root.  Defined for the ellipse
/// family only; meaningful near the cut.
std::pair<Complex, Complex> schwarz_two_branches(const ParametricCurve& curve, Complex z);

/// Known singularities of the Schwarz function.  Supported only for
/// InvertedEllipse: branch points {+1,-1}, simple poles +-2i/(rho^2-rho^-2)
/// inside the curve.  Other kinds throw std::invalid_argument.
SchwarzSingularities schwarz_singularities(const ParametricCurve& curve);

/// True if p is enclosed by the sampled boundary polygon (winding number
/// nonzero).  Points very close to the polygon are unreliable, as usual.
bool winding_inside(const std::vector<Complex>& nodes, Complex p);

/// Minimum distance from z to the curve, estimated on a fine parameter grid.
double distance_to_curve(const ParametricCurve& curve, Complex z, int grid = 4096);

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i") into a complex number.
Complex parse_complex(const std::string& text);

}  // namespace laprat

#endif
