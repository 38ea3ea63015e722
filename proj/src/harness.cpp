#include "laprat/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "laprat/aaa.hpp"
#include "laprat/rates.hpp"
#include "laprat/schwarz.hpp"

namespace laprat {

namespace {

constexpr int kNpolyCompanion = 10;  // fixed smooth part of the rational fits

std::string method_name(SweepMethod m) {
    return m == SweepMethod::poly ? "poly" : "rational";
}

SweepMethod method_from_name(const std::string& s) {
    if (s == "poly") return SweepMethod::poly;
    if (s == "rational") return SweepMethod::rational;
    throw std::invalid_argument("unknown sweep method: " + s);
}

std::string pole_source_name(PoleSource s) {
    switch (s) {
        case PoleSource::from_data: return "from_data";
        case PoleSource::from_schwarz: return "from_schwarz";
        case PoleSource::exact_branch_cut: return "exact_branch_cut";
    }
    return "from_schwarz";
}

PoleSource pole_source_from_name(const std::string& s) {
    if (s == "from_data") return PoleSource::from_data;
    if (s == "from_schwarz") return PoleSource::from_schwarz;
    if (s == "exact_branch_cut") return PoleSource::exact_branch_cut;
    throw std::invalid_argument("unknown pole source: " + s);
}

nlohmann::json complex_to_json(Complex z) { return {z.real(), z.imag()}; }

int fit_nodes_for_degree(int configM, int degree) {
    // keep the stacked real system strongly overdetermined at large degrees
    return std::max(configM, 8 * degree + 2);
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
    return {{"curve", curve},
            {"data", data},
            {"method", method_name(method)},
            {"pole_source", pole_source_name(pole_source)},
            {"M", M},
            {"degrees", degrees},
            {"tol", tol},
            {"output_path", output_path}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.curve = j.at("curve").get<std::string>();
    c.data = j.at("data").get<std::string>();
    c.method = method_from_name(j.at("method").get<std::string>());
    c.pole_source = pole_source_from_name(j.at("pole_source").get<std::string>());
    c.M = j.at("M").get<int>();
    c.degrees = j.at("degrees").get<std::vector<int>>();
    c.tol = j.at("tol").get<double>();
    c.output_path = j.value("output_path", std::string());
    return c;
}

BoundaryFunction parse_boundary_data(const std::string& spec) {
    if (spec == "one") return [](Complex) { return 1.0; };
    if (spec == "x") return [](Complex z) { return z.real(); };
    if (spec == "y") return [](Complex z) { return z.imag(); };
    if (spec == "(y+1)^2" || spec == "yp1sq")
        return [](Complex z) { return (z.imag() + 1.0) * (z.imag() + 1.0); };
    if (spec.rfind("const:", 0) == 0) {
        const double v = std::stod(spec.substr(6));
        return [v](Complex) { return v; };
    }
    throw std::invalid_argument("unknown boundary data spec: " + spec);
}

double plateau_floor(const std::vector<double>& errors) {
    if (errors.empty()) return 0.0;
    const size_t take = std::min<size_t>(3, errors.size());
    std::vector<double> tail(errors.end() - take, errors.end());
    std::sort(tail.begin(), tail.end());
    return take == 3 ? tail[1] : (take == 2 ? 0.5 * (tail[0] + tail[1]) : tail[0]);
}

SlopeFit fit_slope(const std::vector<int>& degrees, const std::vector<double>& errors,
                   double floor) {
    SlopeFit out;
    std::vector<double> xs, ys;
    for (size_t i = 0; i < degrees.size() && i < errors.size(); ++i) {
        const double e = errors[i];
        if (!(e > 10.0 * floor) || !std::isfinite(e) || e <= 0.0) continue;
        xs.push_back(degrees[i]);
        ys.push_back(std::log(e));
    }
    if (xs.size() < 3) return out;
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return out;
    out.factor = std::exp((n * sxy - sx * sy) / denom);
    out.defined = true;
    return out;
}

double ConvergenceRecord::fitted_degree_per_digit() const {
    if (!rate_defined || fitted_rate >= 1.0 || fitted_rate <= 0.0)
        return std::numeric_limits<double>::infinity();
    return std::log(10.0) / (-std::log(fitted_rate));
}

namespace {

void finalize_record(ConvergenceRecord& rec) {
    rec.plateau_floor = plateau_floor(rec.errors);
    const SlopeFit slope = fit_slope(rec.degrees, rec.errors, rec.plateau_floor);
    rec.fitted_rate = slope.factor;
    rec.rate_defined = slope.defined;
}

void push_point(std::map<int, double>& points, int degree, double error) {
    auto it = points.find(degree);
    if (it == points.end())
        points.emplace(degree, error);
    else
        it->second = std::min(it->second, error);
}

ConvergenceRecord sweep_poly(const ExperimentConfig& config, const ParametricCurve& curve,
                             const BoundaryFunction& h) {
    std::map<int, double> points;
    for (int n : config.degrees) {
        try {
            const HarmonicApproximant fit =
                fit_laplace_poly(curve, h, n, fit_nodes_for_degree(config.M, n));
            push_point(points, n, fit.boundary_error);
        } catch (const std::exception&) {
            // per-degree failures leave a gap; the sweep continues
        }
    }
    ConvergenceRecord rec;
    for (const auto& [deg, err] : points) {
        rec.degrees.push_back(deg);
        rec.errors.push_back(err);
    }
    return rec;
}

ConvergenceRecord sweep_rational(const ExperimentConfig& config, const ParametricCurve& curve,
                                 const BoundaryFunction& h) {
    std::map<int, double> points;
    const int max_target = config.degrees.empty()
                               ? 0
                               : *std::max_element(config.degrees.begin(), config.degrees.end());

    if (config.pole_source == PoleSource::exact_branch_cut) {
        const BoundarySample sample = sample_boundary(curve, config.M);
        for (int target : config.degrees) {
            try {
                const int per_side = std::max(0, target - kNpolyCompanion) / 2;
                PoleBasis basis;
                basis.source = config.pole_source;
                if (per_side >= 1)
                    basis = select_poles(curve, sample, h, config.tol,
                                         PoleSource::exact_branch_cut, per_side);
                const int degree = kNpolyCompanion + static_cast<int>(basis.poles.size());
                const HarmonicApproximant fit = fit_laplace_rational(
                    curve, h, basis, kNpolyCompanion, fit_nodes_for_degree(config.M, degree));
                push_point(points, degree, fit.boundary_error);
            } catch (const std::exception&) {
            }
        }
    } else {
        // One nested pole family for the whole sweep: prefixes of a single
        // greedy AAA support sequence, weights recomputed per prefix.
        const BoundarySample sample = sample_boundary(curve, std::max(config.M, 2000));
        std::vector<Complex> F(sample.nodes.size());
        for (size_t k = 0; k < F.size(); ++k)
            F[k] = config.pole_source == PoleSource::from_schwarz
                       ? std::conj(sample.nodes[k])
                       : Complex(h(sample.nodes[k]), 0.0);
        const int mmax = std::min(std::max(max_target - kNpolyCompanion + 12, 2),
                                  sample.count() / 2 - 1);
        const BarycentricRational full = aaa_fit(sample.nodes, F, config.tol, mmax);

        // exterior pole count per support prefix
        const int msup = static_cast<int>(full.support.size());
        std::vector<std::vector<Complex>> prefix_poles(msup + 1);
        for (int m = 2; m <= msup; ++m) {
            const BarycentricRational pref = prefix_interpolant(full, sample.nodes, F, m);
            prefix_poles[m] = discard_interior_poles(poles(pref), sample);
        }

        for (int target : config.degrees) {
            try {
                const int want = target - kNpolyCompanion;
                int pick = 0;
                for (int m = 2; m <= msup; ++m)
                    if (static_cast<int>(prefix_poles[m].size()) <= want) pick = m;
                PoleBasis basis;
                basis.source = config.pole_source;
                if (pick >= 2) basis.poles = prefix_poles[pick];
                const int degree = kNpolyCompanion + static_cast<int>(basis.poles.size());
                const HarmonicApproximant fit = fit_laplace_rational(
                    curve, h, basis, kNpolyCompanion, fit_nodes_for_degree(config.M, degree));
                push_point(points, degree, fit.boundary_error);
            } catch (const std::exception&) {
            }
        }
    }

    ConvergenceRecord rec;
    for (const auto& [deg, err] : points) {
        rec.degrees.push_back(deg);
        rec.errors.push_back(err);
    }
    return rec;
}

}  // namespace

ConvergenceRecord run_sweep(const ExperimentConfig& config) {
    const ParametricCurve curve = ParametricCurve::parse(config.curve);
    const BoundaryFunction h = parse_boundary_data(config.data);

    ConvergenceRecord rec = config.method == SweepMethod::poly
                                ? sweep_poly(config, curve, h)
                                : sweep_rational(config, curve, h);
    rec.method = config.method;
    rec.curve = config.curve;
    if (curve.kind() == CurveKind::InvertedEllipse) {
        rec.prediction_available = true;
        rec.predicted_rate = config.method == SweepMethod::poly
                                 ? 1.0 / analyticity_radius_ie(curve.rho())
                                 : 1.0 / (curve.rho() * curve.rho());
    }
    finalize_record(rec);
    return rec;
}

double round_sig(double x, int sig) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::floor(std::log10(std::abs(x)));
    const double factor = std::pow(10.0, sig - 1 - mag);
    return std::round(x * factor) / factor;
}

std::vector<double> default_radius_table_rhos() {
    return {2.0, 1.9, 1.8, 1.7, 1.6, 1.5, 1.4, 1.3, 1.2, 1.1};
}

std::vector<RadiusTableRow> radius_table(const std::vector<double>& rhos) {
    std::vector<RadiusTableRow> rows;
    for (double rho : rhos) {
        RadiusTableRow row;
        row.rho = rho;
        row.R = analyticity_radius_ie(rho);
        row.deg_per_digit = degree_per_digit(row.R);
        row.R_rounded = 1.0 + round_sig(row.R - 1.0, 2);
        row.deg_per_digit_rounded = round_sig(row.deg_per_digit, 2);
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json schwarz_report(const std::string& curve_spec, int M, double tol) {
    const ParametricCurve curve = ParametricCurve::parse(curve_spec);
    const BoundarySample sample = sample_boundary(curve, M);
    double zmax = 0.0;
    for (const Complex& z : sample.nodes) zmax = std::max(zmax, std::abs(z));
    // tol is an absolute residual target; the fitter works relative to max|F|
    const SchwarzApprox approx = schwarz_fit(curve, M, tol / zmax);

    nlohmann::json j;
    j["curve"] = curve_spec;
    j["points"] = M;
    j["tol"] = tol;
    j["degree"] = approx.rational.degree();
    j["residual"] = approx.rational.tol_achieved * zmax;
    j["converged"] = approx.rational.tol_achieved * zmax <= tol;
    j["interior_poles"] = nlohmann::json::array();
    for (const Complex& p : approx.interior_poles) j["interior_poles"].push_back(complex_to_json(p));
    j["exterior_poles"] = nlohmann::json::array();
    for (const Complex& p : approx.exterior_poles) j["exterior_poles"].push_back(complex_to_json(p));
    j["branch_estimates"] = nlohmann::json::array();
    for (const BranchEstimate& b : approx.branch_estimates)
        j["branch_estimates"].push_back(
            {{"location", complex_to_json(b.location)},
             {"side", b.side == CurveSide::interior ? "interior" : "exterior"}});
    return j;
}

nlohmann::json record_to_json(const ConvergenceRecord& rec) {
    nlohmann::json j;
    j["method"] = method_name(rec.method);
    j["curve"] = rec.curve;
    j["degrees"] = rec.degrees;
    j["errors"] = rec.errors;
    j["fitted_rate"] = rec.fitted_rate;
    j["rate_defined"] = rec.rate_defined;
    j["predicted_rate"] = rec.predicted_rate;
    j["prediction_available"] = rec.prediction_available;
    j["plateau_floor"] = rec.plateau_floor;
    return j;
}

nlohmann::json radius_table_to_json(const std::vector<RadiusTableRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const RadiusTableRow& r : rows)
        j.push_back({{"rho", r.rho},
                     {"R", r.R},
                     {"degree_per_digit", r.deg_per_digit},
                     {"R_rounded", r.R_rounded},
                     {"degree_per_digit_rounded", r.deg_per_digit_rounded}});
    return j;
}

std::string record_to_csv(const ConvergenceRecord& rec) {
    std::ostringstream os;
    os.precision(17);
    os << "degree,error,predicted_error_line\n";
    for (size_t i = 0; i < rec.degrees.size(); ++i) {
        os << rec.degrees[i] << "," << rec.errors[i] << ",";
        if (rec.prediction_available && !rec.errors.empty())
            os << rec.errors[0] * std::pow(rec.predicted_rate,
                                           rec.degrees[i] - rec.degrees[0]);
        os << "\n";
    }
    return os.str();
}

}  // namespace laprat
