// Experiment driver: degree sweeps with slope extraction, analyticity-radius
// tables, Schwarz reports, and their CSV/JSON serializations.
#ifndef LAPRAT_HARNESS_HPP
#define LAPRAT_HARNESS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "laprat/geometry.hpp"
#include "laprat/polysolver.hpp"
#include "laprat/ratsolver.hpp"

namespace laprat {

enum class SweepMethod { poly, rational };

struct ExperimentConfig {
    std::string curve;              // ParametricCurve::parse spec
    std::string data = "(y+1)^2";   // boundary data spec
    SweepMethod method = SweepMethod::poly;
    PoleSource pole_source = PoleSource::from_schwarz;
    int M = 1500;                   // minimum fit nodes; raised per degree
    std::vector<int> degrees;
    double tol = 1e-13;             // pole-selection AAA tolerance
    std::string output_path;

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

struct ConvergenceRecord {
    SweepMethod method = SweepMethod::poly;
    std::string curve;
    std::vector<int> degrees;       // strictly increasing
    std::vector<double> errors;
    double fitted_rate = 0.0;       // per-degree geometric factor
    bool rate_defined = false;
    double predicted_rate = 0.0;    // 1/R or 1/rho^2 for inverted ellipses
    bool prediction_available = false;
    double plateau_floor = 0.0;

    double fitted_degree_per_digit() const;  // ln10 / -ln(fitted_rate)
};

/// Parses the boundary data grammar: "one", "const:V", "x", "y",
/// "(y+1)^2" (alias "yp1sq").
BoundaryFunction parse_boundary_data(const std::string& spec);

struct SlopeFit {
    double factor = 0.0;  // e^{slope} per degree
    bool defined = false;
};

/// Least-squares line on (degree, ln error) over the pre-plateau window
/// (errors > 10 * floor); undefined with fewer than 3 usable points.
SlopeFit fit_slope(const std::vector<int>& degrees, const std::vector<double>& errors,
                   double floor);

/// Median of the last three errors, the observed roundoff plateau level.
double plateau_floor(const std::vector<double>& errors);

/// Runs the configured degree sweep.  Polynomial sweeps fit each scheduled
/// degree directly; rational sweeps reuse one nested pole family (prefixes of
/// a single greedy AAA support sequence, or branch-cut ladders of matching
/// size) so that all sweep points share a basis.
ConvergenceRecord run_sweep(const ExperimentConfig& config);

struct RadiusTableRow {
    double rho = 0.0;
    double R = 0.0;
    double deg_per_digit = 0.0;
    double R_rounded = 0.0;          // 1 + (R-1 to 2 significant figures)
    double deg_per_digit_rounded = 0.0;
};

/// Analyticity radius and polynomial cost per digit for each rho, with the
/// 2-significant-figure rounded view alongside the full-precision values.
std::vector<RadiusTableRow> radius_table(const std::vector<double>& rhos);

/// Default row set: rho = 2.0, 1.9, ..., 1.1.
std::vector<double> default_radius_table_rhos();

/// Rounds x to `sig` significant figures.
double round_sig(double x, int sig);

/// Schwarz-function report: AAA degree and residual, partitioned poles, and
/// branch estimates.  tol is an absolute residual target here (converted to
/// the fitter's relative convention internally).
nlohmann::json schwarz_report(const std::string& curve_spec, int M, double tol);

nlohmann::json record_to_json(const ConvergenceRecord& rec);
nlohmann::json radius_table_to_json(const std::vector<RadiusTableRow>& rows);

/// CSV with header degree,error,predicted_error_line; the prediction column
/// is the theoretical geometric decay anchored at the first sweep point
/// (empty when no prediction is available).
std::string record_to_csv(const ConvergenceRecord& rec);

}  // namespace laprat

#endif
