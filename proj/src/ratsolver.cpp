#include "laprat/ratsolver.hpp"

#include <cmath>
#include <stdexcept>

#include "laprat/aaa.hpp"

namespace laprat {

std::vector<Complex> discard_interior_poles(const std::vector<Complex>& candidates,
                                            const BoundarySample& sample) {
    std::vector<Complex> kept;
    for (const Complex& p : candidates)
        if (!winding_inside(sample.nodes, p)) kept.push_back(p);
    return kept;
}

PoleBasis select_poles(const ParametricCurve& curve, const BoundarySample& sample,
                       const BoundaryFunction& h, double tol, PoleSource source, int n) {
    PoleBasis basis;
    basis.source = source;
    std::vector<Complex> candidates;

    switch (source) {
        case PoleSource::from_data: {
            std::vector<Complex> F(sample.nodes.size());
            for (size_t k = 0; k < F.size(); ++k) F[k] = h(sample.nodes[k]);
            const BarycentricRational r = aaa_fit(sample.nodes, F, tol);
            if (r.support.size() >= 2) candidates = poles(r);
            break;
        }
        case PoleSource::from_schwarz: {
            std::vector<Complex> F(sample.nodes.size());
            for (size_t k = 0; k < F.size(); ++k) F[k] = std::conj(sample.nodes[k]);
            const BarycentricRational r = aaa_fit(sample.nodes, F, tol);
            if (r.support.size() >= 2) candidates = poles(r);
            break;
        }
        case PoleSource::exact_branch_cut: {
            if (curve.kind() != CurveKind::InvertedEllipse)
                throw std::invalid_argument(
                    "select_poles: exact_branch_cut needs an inverted ellipse");
            if (n < 1) throw std::invalid_argument("select_poles: n must be >= 1");
            const double sigma = 4.0, d = 1.0;
            for (int k = 0; k < n; ++k) {
                const double off = d * std::exp(-sigma * k / std::sqrt(static_cast<double>(n)));
                candidates.emplace_back(1.0 + off, 0.0);
                candidates.emplace_back(-1.0 - off, 0.0);
            }
            break;
        }
    }

    basis.poles = discard_interior_poles(candidates, sample);
    basis.all_discarded = basis.poles.empty() && !candidates.empty();
    return basis;
}

HarmonicApproximant fit_laplace_rational(const ParametricCurve& curve, const BoundaryFunction& h,
                                         const PoleBasis& basis, int npoly, int M) {
    return fit_laplace_basis(curve, h, npoly, basis.poles, M);
}

}  // namespace laprat
