#include "laprat/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "laprat/ratsolver.hpp"

namespace laprat {

namespace {

// Single-linkage strings: poles are linked when closer than 3x the median
// nearest-neighbor spacing of the whole set.
std::vector<std::vector<Complex>> cluster_strings(const std::vector<Complex>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return {};
    if (n == 1) return {{pts[0]}};

    std::vector<double> nn(n, std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) nn[i] = std::min(nn[i], std::abs(pts[i] - pts[j]));
    std::vector<double> sorted = nn;
    std::sort(sorted.begin(), sorted.end());
    const double median = (n % 2) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double link = 3.0 * median;

    std::vector<int> label(n, -1);
    std::vector<std::vector<Complex>> out;
    for (int i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        std::vector<int> stack = {i};
        label[i] = static_cast<int>(out.size());
        std::vector<Complex> group;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            group.push_back(pts[cur]);
            for (int j = 0; j < n; ++j) {
                if (label[j] < 0 && std::abs(pts[cur] - pts[j]) <= link) {
                    label[j] = label[i];
                    stack.push_back(j);
                }
            }
        }
        out.push_back(std::move(group));
    }
    return out;
}

void add_estimates(const ParametricCurve& curve, const std::vector<Complex>& pole_set,
                   CurveSide side, std::vector<BranchEstimate>& estimates) {
    for (const auto& str : cluster_strings(pole_set)) {
        if (str.size() < 3) continue;  // spurious singletons and pairs
        // endpoints of the string = its diameter pair; a cut segment can end
        // in a branch point at both ends (e.g. the ellipse's focal segment),
        // so the far endpoint is also reported when it hugs the curve
        size_t ia = 0, ib = 0;
        double diam = 0.0;
        for (size_t i = 0; i < str.size(); ++i)
            for (size_t j = i + 1; j < str.size(); ++j) {
                const double d = std::abs(str[i] - str[j]);
                if (d > diam) {
                    diam = d;
                    ia = i;
                    ib = j;
                }
            }
        Complex e0 = str[ia], e1 = str[ib];
        double d0 = distance_to_curve(curve, e0);
        double d1 = distance_to_curve(curve, e1);
        if (d1 < d0) {
            std::swap(e0, e1);
            std::swap(d0, d1);
        }
        estimates.push_back({e0, side});
        if (d1 <= 0.5 * diam) estimates.push_back({e1, side});
    }
}

}  // namespace

SchwarzApprox schwarz_fit(const ParametricCurve& curve, int M, double tol) {
    if (M < 500) throw std::invalid_argument("schwarz_fit: need M >= 500 for clustering");
    const BoundarySample sample = sample_boundary(curve, M);
    std::vector<Complex> F(sample.nodes.size());
    for (size_t k = 0; k < F.size(); ++k) F[k] = std::conj(sample.nodes[k]);

    SchwarzApprox out;
    out.rational = aaa_fit(sample.nodes, F, tol);
    if (out.rational.support.size() >= 2) {
        for (const Complex& p : poles(out.rational)) {
            if (winding_inside(sample.nodes, p))
                out.interior_poles.push_back(p);
            else
                out.exterior_poles.push_back(p);
        }
    }
    add_estimates(curve, out.exterior_poles, CurveSide::exterior, out.branch_estimates);
    add_estimates(curve, out.interior_poles, CurveSide::interior, out.branch_estimates);
    return out;
}

double reflection_check(const ParametricCurve& curve, Complex z) {
    if (curve.kind() == CurveKind::Trig)
        throw std::invalid_argument("reflection_check: exact Schwarz function unavailable");
    const double dist = distance_to_curve(curve, z);
    if (dist >= 0.05 * (curve.rho() - 1.0))
        throw std::domain_error("reflection_check: point too far from the curve");
    const Complex w = std::conj(schwarz_exact(curve, z));
    const Complex back = std::conj(schwarz_exact(curve, w));
    return std::abs(back - z);
}

ContinuationWitness continuation_violation_witness(const ParametricCurve& curve,
                                                   const BoundaryFunction& h, double b) {
    if (curve.kind() != CurveKind::InvertedEllipse)
        throw std::invalid_argument("continuation_violation_witness: needs an inverted ellipse");
    if (!(b > 1.0)) throw std::invalid_argument("continuation_violation_witness: need b > 1");

    ContinuationWitness w;
    const auto [s1, s2] = schwarz_two_branches(curve, Complex(b, 0.0));
    w.a1 = std::conj(s1);
    w.a2 = std::conj(s2);

    const int M = 2000;
    const BoundarySample sample = sample_boundary(curve, M);
    const PoleBasis basis =
        select_poles(curve, sample, h, 1e-12, PoleSource::from_schwarz);
    const HarmonicApproximant fit = fit_laplace_rational(curve, h, basis, 10, M);
    const std::vector<double> u = fit.evaluate({w.a1, w.a2});
    w.delta_u = std::abs(u[0] - u[1]);
    return w;
}

}  // namespace laprat
