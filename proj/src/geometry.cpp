#include "laprat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace laprat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Complex joukowsky(Complex w) {
    if (w == Complex(0.0, 0.0)) throw std::domain_error("joukowsky: w = 0");
    return 0.5 * (w + 1.0 / w);
}

ParametricCurve::ParametricCurve(CurveKind kind, double rho, std::vector<Complex> coeffs)
    : kind_(kind), rho_(rho), coeffs_(std::move(coeffs)) {}

ParametricCurve ParametricCurve::ellipse(double rho) {
    if (!(rho > 1.0)) throw std::invalid_argument("ellipse: rho must exceed 1");
    return ParametricCurve(CurveKind::Ellipse, rho, {});
}

ParametricCurve ParametricCurve::inverted_ellipse(double rho) {
    if (!(rho > 1.0)) throw std::invalid_argument("inverted_ellipse: rho must exceed 1");
    return ParametricCurve(CurveKind::InvertedEllipse, rho, {});
}

ParametricCurve ParametricCurve::trig(std::vector<Complex> coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw std::invalid_argument("trig: coefficient list must have odd length c_{-K}..c_{K}");
    ParametricCurve c(CurveKind::Trig, 0.0, std::move(coeffs));
    c.validate();
    return c;
}

double ParametricCurve::rho() const {
    if (kind_ == CurveKind::Trig) throw std::invalid_argument("rho: trig curve has no rho");
    return rho_;
}

Complex ParametricCurve::point(double theta) const {
    switch (kind_) {
        case CurveKind::Ellipse:
            return joukowsky(rho_ * std::polar(1.0, theta));
        case CurveKind::InvertedEllipse:
            return 1.0 / joukowsky(rho_ * std::polar(1.0, theta));
        case CurveKind::Trig: {
            const int K = static_cast<int>(coeffs_.size() / 2);
            Complex z = 0.0;
            for (int k = -K; k <= K; ++k) z += coeffs_[k + K] * std::polar(1.0, k * theta);
            return z;
        }
    }
    throw std::logic_error("unreachable");
}

Complex ParametricCurve::derivative(double theta) const {
    const Complex i(0.0, 1.0);
    switch (kind_) {
        case CurveKind::Ellipse: {
            const Complex w = rho_ * std::polar(1.0, theta);
            return 0.5 * (1.0 - 1.0 / (w * w)) * i * w;
        }
        case CurveKind::InvertedEllipse: {
            const Complex w = rho_ * std::polar(1.0, theta);
            const Complex J = joukowsky(w);
            return -0.5 * (1.0 - 1.0 / (w * w)) * i * w / (J * J);
        }
        case CurveKind::Trig: {
            const int K = static_cast<int>(coeffs_.size() / 2);
            Complex d = 0.0;
            for (int k = -K; k <= K; ++k)
                d += coeffs_[k + K] * Complex(0.0, k) * std::polar(1.0, k * theta);
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

void ParametricCurve::validate() const {
    const int N = 1024;
    std::vector<Complex> z(N);
    double scale = 0.0;
    double min_deriv = std::numeric_limits<double>::max();
    for (int k = 0; k < N; ++k) {
        const double th = kTwoPi * k / N;
        z[k] = point(th);
        scale = std::max(scale, std::abs(z[k]));
        min_deriv = std::min(min_deriv, std::abs(derivative(th)));
    }
    if (min_deriv <= 1e-8 * scale)
        throw std::invalid_argument("curve: boundary derivative vanishes");
    // Injectivity: no two non-adjacent edges of the sampled polygon may cross.
    auto crosses = [](Complex a, Complex b, Complex c, Complex d) {
        auto side = [](Complex p, Complex q, Complex r) {
            const Complex u = q - p, v = r - p;
            return u.real() * v.imag() - u.imag() * v.real();
        };
        return side(a, b, c) * side(a, b, d) < 0.0 && side(c, d, a) * side(c, d, b) < 0.0;
    };
    for (int j = 0; j < N; ++j) {
        for (int k = j + 2; k < N; ++k) {
            if (j == 0 && k == N - 1) continue;  // adjacent around the wrap
            if (crosses(z[j], z[(j + 1) % N], z[k], z[(k + 1) % N]))
                throw std::invalid_argument("curve: boundary self-intersects");
        }
    }
}

ParametricCurve ParametricCurve::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("curve spec: missing ':' in \"" + spec + "\"");
    const std::string head = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    if (head == "ell" || head == "iell") {
        double rho = 0.0;
        try {
            size_t pos = 0;
            rho = std::stod(body, &pos);
            if (pos != body.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("curve spec: bad rho \"" + body + "\"");
        }
        return head == "ell" ? ellipse(rho) : inverted_ellipse(rho);
    }
    if (head == "trig") {
        std::vector<Complex> coeffs;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_complex(item));
        return trig(std::move(coeffs));
    }
    throw std::invalid_argument("curve spec: unknown family \"" + head + "\"");
}

std::string ParametricCurve::spec_string() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case CurveKind::Ellipse: os << "ell:" << rho_; break;
        case CurveKind::InvertedEllipse: os << "iell:" << rho_; break;
        case CurveKind::Trig: {
            os << "trig:";
            for (size_t j = 0; j < coeffs_.size(); ++j) {
                if (j) os << ",";
                os << coeffs_[j].real();
                if (coeffs_[j].imag() != 0.0) os << (coeffs_[j].imag() > 0 ? "+" : "") << coeffs_[j].imag() << "i";
            }
            break;
        }
    }
    return os.str();
}

BoundarySample sample_boundary(const ParametricCurve& curve, int M) {
    if (M < 8) throw std::invalid_argument("sample_boundary: need M >= 8");
    BoundarySample s;
    s.nodes.resize(M);
    s.params.resize(M);
    for (int k = 0; k < M; ++k) {
        s.params[k] = kTwoPi * k / M;
        s.nodes[k] = curve.point(s.params[k]);
    }
    return s;
}

namespace {

// sqrt(z^2 - 1) with the branch that is ~z at infinity; cut on [-1,1].
Complex sqrt_zsq_minus_1(Complex z) {
    return z * std::sqrt(1.0 - 1.0 / (z * z));
}

Complex schwarz_ellipse(double rho, Complex z) {
    const double r2 = rho * rho, ri2 = 1.0 / r2;
    return 0.5 * (r2 + ri2) * z - 0.5 * (r2 - ri2) * sqrt_zsq_minus_1(z);
}

// Both determinations near the cut, via +-i*sqrt(1-z^2).
std::pair<Complex, Complex> schwarz_ellipse_branches(double rho, Complex z) {
    const double r2 = rho * rho, ri2 = 1.0 / r2;
    const Complex root = Complex(0.0, 1.0) * std::sqrt(1.0 - z * z);
    const Complex base = 0.5 * (r2 + ri2) * z;
    const Complex off = 0.5 * (r2 - ri2) * root;
    return {base - off, base + off};
}

bool on_ellipse_cut(Complex z, double tol) {
    return std::abs(z.imag()) < tol && std::abs(z.real()) <= 1.0 + tol;
}

bool on_inverted_cut(Complex z, double tol) {
    return std::abs(z.imag()) < tol && std::abs(z.real()) >= 1.0 - tol;
}

}  // namespace

Complex schwarz_exact(const ParametricCurve& curve, Complex z) {
    constexpr double cut_tol = 1e-13;
    switch (curve.kind()) {
        case CurveKind::Ellipse:
            if (on_ellipse_cut(z, cut_tol)) throw std::domain_error("schwarz_exact: z on branch cut [-1,1]");
            return schwarz_ellipse(curve.rho(), z);
        case CurveKind::InvertedEllipse: {
            if (on_inverted_cut(z, cut_tol))
                throw std::domain_error("schwarz_exact: z on branch cut |Re z| >= 1");
            if (z == Complex(0.0, 0.0)) return 0.0;  // 1/S_E(1/z) -> 0 as z -> 0
            const Complex denom = schwarz_ellipse(curve.rho(), 1.0 / z);
            if (std::abs(denom) < 1e-13) throw std::domain_error("schwarz_exact: z at a pole of S");
            return 1.0 / denom;
        }
        case CurveKind::Trig:
            throw std::invalid_argument("schwarz_exact: no closed form for trig curves");
    }
    throw std::logic_error("unreachable");
}

std::pair<Complex, Complex> schwarz_two_branches(const ParametricCurve& curve, Complex z) {
    switch (curve.kind()) {
        case CurveKind::Ellipse:
            return schwarz_ellipse_branches(curve.rho(), z);
        case CurveKind::InvertedEllipse: {
            auto [a, b] = schwarz_ellipse_branches(curve.rho(), 1.0 / z);
            return {1.0 / a, 1.0 / b};
        }
        case CurveKind::Trig:
            throw std::invalid_argument("schwarz_two_branches: no closed form for trig curves");
    }
    throw std::logic_error("unreachable");
}

SchwarzSingularities schwarz_singularities(const ParametricCurve& curve) {
    if (curve.kind() != CurveKind::InvertedEllipse)
        throw std::invalid_argument("schwarz_singularities: available for InvertedEllipse only");
    const double rho = curve.rho();
    const double pole = 2.0 / (rho * rho - 1.0 / (rho * rho));
    SchwarzSingularities s;
    s.branch_points = {Complex(1.0, 0.0), Complex(-1.0, 0.0)};
    s.interior_poles = {Complex(0.0, pole), Complex(0.0, -pole)};
    return s;
}

bool winding_inside(const std::vector<Complex>& nodes, Complex p) {
    double total = 0.0;
    const size_t M = nodes.size();
    for (size_t k = 0; k < M; ++k) {
        const Complex a = nodes[k] - p;
        const Complex b = nodes[(k + 1) % M] - p;
        total += std::arg(b / a);
    }
    return std::abs(total) > std::numbers::pi;
}

double distance_to_curve(const ParametricCurve& curve, Complex z, int grid) {
    double best = std::numeric_limits<double>::max();
    for (int k = 0; k < grid; ++k)
        best = std::min(best, std::abs(z - curve.point(kTwoPi * k / grid)));
    return best;
}

Complex parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw std::invalid_argument("parse_complex: empty");
    const bool has_i = s.back() == 'i';
    if (!has_i) {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("parse_complex: bad number \"" + text + "\"");
        return Complex(v, 0.0);
    }
    s.pop_back();
    // Split at the last +/- that is not a leading sign or exponent sign.
    size_t split = std::string::npos;
    for (size_t j = s.size(); j-- > 1;) {
        if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
            split = j;
            break;
        }
    }
    auto imag_part = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("parse_complex: bad number \"" + text + "\"");
        return v;
    };
    if (split == std::string::npos) return Complex(0.0, imag_part(s));
    size_t pos = 0;
    const double re = std::stod(s.substr(0, split), &pos);
    if (pos != split) throw std::invalid_argument("parse_complex: bad number \"" + text + "\"");
    return Complex(re, imag_part(s.substr(split)));
}

}  // namespace laprat
