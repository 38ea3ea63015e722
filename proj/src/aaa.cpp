#include "laprat/aaa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "laprat/linalg.hpp"

namespace laprat {

namespace {

// Smallest right singular vector of the Loewner matrix built on the
// non-support rows: L(i,j) = (F_i - f_j) / (Z_i - z_j).
std::vector<Complex> loewner_weights(const std::vector<Complex>& Z,
                                     const std::vector<Complex>& F,
                                     const std::vector<int>& support_idx,
                                     const std::vector<char>& in_support) {
    const int N = static_cast<int>(Z.size());
    const int m = static_cast<int>(support_idx.size());
    DenseMatrix L(N - m, m);
    int row = 0;
    for (int i = 0; i < N; ++i) {
        if (in_support[i]) continue;
        for (int j = 0; j < m; ++j) {
            const int sj = support_idx[j];
            L(row, j) = (F[i] - F[sj]) / (Z[i] - Z[sj]);
        }
        ++row;
    }
    const ComplexVector w = min_singular_vector(L);
    return {w.data(), w.data() + m};
}

BarycentricRational assemble(const std::vector<Complex>& Z, const std::vector<Complex>& F,
                             const std::vector<int>& support_idx,
                             const std::vector<char>& in_support) {
    BarycentricRational r;
    for (int idx : support_idx) {
        r.support.push_back(Z[idx]);
        r.values.push_back(F[idx]);
    }
    r.weights = loewner_weights(Z, F, support_idx, in_support);
    return r;
}

}  // namespace

BarycentricRational aaa_fit(const std::vector<Complex>& Z, const std::vector<Complex>& F,
                            double tol, int mmax) {
    const int N = static_cast<int>(Z.size());
    if (N < 2 || F.size() != Z.size())
        throw std::invalid_argument("aaa_fit: need |Z| = |F| >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("aaa_fit: tol must be positive");

    double fmax = 0.0;
    Complex fmean = 0.0;
    for (const Complex& f : F) {
        fmax = std::max(fmax, std::abs(f));
        fmean += f;
    }
    fmean /= static_cast<double>(N);
    const double fscale = std::max(fmax, 1e-300);

    std::vector<char> in_support(N, 0);
    std::vector<int> support_idx;
    std::vector<Complex> resid(N);
    for (int i = 0; i < N; ++i) resid[i] = F[i] - fmean;

    BarycentricRational r;
    double maxres = 0.0;
    for (int i = 0; i < N; ++i) maxres = std::max(maxres, std::abs(resid[i]));

    while (static_cast<int>(support_idx.size()) <= mmax) {
        // next support point: largest current residual, lowest index on ties
        int pick = -1;
        double best = -1.0;
        for (int i = 0; i < N; ++i) {
            if (in_support[i]) continue;
            const double a = std::abs(resid[i]);
            if (a > best) {
                best = a;
                pick = i;
            }
        }
        if (pick < 0) break;
        in_support[pick] = 1;
        support_idx.push_back(pick);
        const int m = static_cast<int>(support_idx.size());
        if (N - m < m) {  // Loewner matrix would be wide; cannot refine further
            in_support[pick] = 0;
            support_idx.pop_back();
            break;
        }

        r = assemble(Z, F, support_idx, in_support);

        maxres = 0.0;
        for (int i = 0; i < N; ++i) {
            if (in_support[i]) {
                resid[i] = 0.0;
                continue;
            }
            Complex num = 0.0, den = 0.0;
            for (int j = 0; j < m; ++j) {
                const Complex d = r.weights[j] / (Z[i] - r.support[j]);
                num += d * r.values[j];
                den += d;
            }
            resid[i] = F[i] - num / den;
            maxres = std::max(maxres, std::abs(resid[i]));
        }
        r.history.push_back(maxres);
        if (maxres <= tol * fscale) break;
    }

    if (r.support.empty()) {  // degenerate tiny data sets
        r.support = {Z[0]};
        r.values = {F[0]};
        r.weights = {Complex(1.0, 0.0)};
        r.history.push_back(maxres);
    }
    r.tol_achieved = r.history.back() / fscale;
    return r;
}

Complex eval_barycentric(const BarycentricRational& r, Complex z) {
    const int m = static_cast<int>(r.support.size());
    Complex num = 0.0, den = 0.0;
    for (int j = 0; j < m; ++j) {
        const Complex diff = z - r.support[j];
        if (std::abs(diff) <= 1e-15 * std::max(std::abs(z), std::abs(r.support[j])))
            return r.values[j];
        const Complex d = r.weights[j] / diff;
        num += d * r.values[j];
        den += d;
    }
    if (den == Complex(0.0, 0.0))  // exactly at a pole
        return Complex(std::numeric_limits<double>::infinity(), 0.0);
    return num / den;
}

std::vector<Complex> eval_barycentric(const BarycentricRational& r,
                                      const std::vector<Complex>& points) {
    std::vector<Complex> out;
    out.reserve(points.size());
    for (const Complex& z : points) out.push_back(eval_barycentric(r, z));
    return out;
}

std::vector<Complex> poles(const BarycentricRational& r) {
    if (r.support.size() < 2) throw std::invalid_argument("poles: need at least 2 support points");
    return generalized_eig_arrowhead(r.support, r.weights);
}

BarycentricRational prefix_interpolant(const BarycentricRational& r,
                                       const std::vector<Complex>& Z,
                                       const std::vector<Complex>& F, int m) {
    const int total = static_cast<int>(r.support.size());
    if (m < 1 || m > total) throw std::invalid_argument("prefix_interpolant: bad prefix length");
    if (m == total) return r;

    const int N = static_cast<int>(Z.size());
    std::vector<char> in_support(N, 0);
    std::vector<int> support_idx;
    for (int j = 0; j < m; ++j) {
        int idx = -1;
        for (int i = 0; i < N; ++i) {
            if (!in_support[i] && Z[i] == r.support[j]) {
                idx = i;
                break;
            }
        }
        if (idx < 0) throw std::invalid_argument("prefix_interpolant: support point not in Z");
        in_support[idx] = 1;
        support_idx.push_back(idx);
    }

    BarycentricRational out = assemble(Z, F, support_idx, in_support);
    double maxres = 0.0;
    for (int i = 0; i < N; ++i) {
        if (in_support[i]) continue;
        maxres = std::max(maxres, std::abs(F[i] - eval_barycentric(out, Z[i])));
    }
    double fmax = 0.0;
    for (const Complex& f : F) fmax = std::max(fmax, std::abs(f));
    out.history.push_back(maxres);
    out.tol_achieved = maxres / std::max(fmax, 1e-300);
    return out;
}

}  // namespace laprat
