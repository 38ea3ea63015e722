// Command-line driver: degree sweeps, analyticity-radius tables, Schwarz
// reports, and rate predictions.  Files get full 17-digit precision; the
// terminal shows rounded views.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "laprat/harness.hpp"
#include "laprat/rates.hpp"

namespace {

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << contents;
}

int run_sweep_cmd(const std::string& curve, const std::string& data, const std::string& method,
                  const std::string& pole_source, const std::vector<int>& degrees, int M,
                  double tol, const std::string& out_path) {
    laprat::ExperimentConfig config;
    config.curve = curve;
    config.data = data;
    config.method = method == "poly" ? laprat::SweepMethod::poly : laprat::SweepMethod::rational;
    if (pole_source == "from_data")
        config.pole_source = laprat::PoleSource::from_data;
    else if (pole_source == "from_schwarz")
        config.pole_source = laprat::PoleSource::from_schwarz;
    else
        config.pole_source = laprat::PoleSource::exact_branch_cut;
    config.degrees = degrees;
    config.M = M;
    config.tol = tol;
    config.output_path = out_path;

    const laprat::ConvergenceRecord rec = laprat::run_sweep(config);
    if (!out_path.empty()) write_file(out_path, laprat::record_to_csv(rec));

    std::printf("sweep %s on %s: %zu points\n", method.c_str(), curve.c_str(),
                rec.degrees.size());
    for (size_t i = 0; i < rec.degrees.size(); ++i)
        std::printf("  degree %4d  error %.3e\n", rec.degrees[i], rec.errors[i]);
    if (rec.rate_defined)
        std::printf("fitted rate %.4f per degree (%.3g degrees/digit)", rec.fitted_rate,
                    rec.fitted_degree_per_digit());
    else
        std::printf("fitted rate undefined (too few pre-plateau points)");
    if (rec.prediction_available) std::printf(", predicted %.4f", rec.predicted_rate);
    std::printf("\n");
    return 0;
}

int run_table_cmd(std::vector<double> rhos, const std::string& out_path) {
    if (rhos.empty()) rhos = laprat::default_radius_table_rhos();
    const auto rows = laprat::radius_table(rhos);
    if (!out_path.empty()) write_file(out_path, laprat::radius_table_to_json(rows).dump(2) + "\n");
    std::printf("%6s  %-16s %s\n", "rho", "R", "degrees/digit");
    for (const auto& r : rows)
        std::printf("%6.2f  %-16.12g %.6g\n", r.rho, r.R_rounded, r.deg_per_digit_rounded);
    return 0;
}

int run_schwarz_cmd(const std::string& curve, int M, double tol, const std::string& out_path) {
    const nlohmann::json report = laprat::schwarz_report(curve, M, tol);
    if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
    std::printf("schwarz fit on %s: degree %d, residual %.3e, %zu interior / %zu exterior poles\n",
                curve.c_str(), report["degree"].get<int>(), report["residual"].get<double>(),
                report["interior_poles"].size(), report["exterior_poles"].size());
    for (const auto& b : report["branch_estimates"])
        std::printf("  branch estimate (%.6f, %.6f) [%s]\n", b["location"][0].get<double>(),
                    b["location"][1].get<double>(), b["side"].get<std::string>().c_str());
    return 0;
}

int run_rates_cmd(double rho) {
    const laprat::RatePrediction p = laprat::rational_rate_ie(rho);
    const laprat::AsymptoticRadius a = laprat::analyticity_radius_asymptotic(rho);
    std::printf("rho = %g\n", rho);
    std::printf("  analyticity radius R      = %.15g\n", p.R);
    std::printf("  asymptotic R (log form)   = %.15g\n", a.log_form);
    std::printf("  poly factor 1/R           = %.15g\n", p.poly_factor);
    std::printf("  rational factor 1/rho^2   = %.15g\n", p.rat_factor);
    std::printf("  degrees per digit (poly)  = %.6g\n", p.degree_per_digit_poly);
    std::printf("  degrees per digit (rat)   = %.6g\n", p.degree_per_digit_rat);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplace boundary-value solvers by polynomial and rational approximation"};
    app.require_subcommand(1);

    std::string curve = "iell:1.5", data = "(y+1)^2", method = "poly";
    std::string pole_source = "from_schwarz", out_path;
    std::vector<int> degrees;
    std::vector<double> rhos;
    int M = 1500;
    double tol = 1e-13, schwarz_tol = 1e-10, rho = 1.5;

    CLI::App* sweep = app.add_subcommand("sweep", "degree sweep of a solver on one curve");
    sweep->add_option("--curve", curve, "curve spec (ell:RHO | iell:RHO | trig:...)");
    sweep->add_option("--data", data, "boundary data (one | const:V | x | y | (y+1)^2)");
    sweep->add_option("--method", method)->check(CLI::IsMember({"poly", "rational"}));
    sweep->add_option("--pole-source", pole_source)
        ->check(CLI::IsMember({"from_data", "from_schwarz", "exact_branch_cut"}));
    sweep->add_option("--degrees", degrees, "degree schedule")->required();
    sweep->add_option("--points", M, "minimum boundary sample count");
    sweep->add_option("--tol", tol, "pole-selection AAA tolerance");
    sweep->add_option("--out", out_path, "CSV output path");

    CLI::App* table = app.add_subcommand("table1", "analyticity radii and degrees per digit");
    table->add_option("--rho-list", rhos, "rho values (default 2.0 down to 1.1)");
    table->add_option("--out", out_path, "JSON output path");

    CLI::App* schwarz = app.add_subcommand("schwarz", "Schwarz-function AAA report");
    schwarz->add_option("--curve", curve)->required();
    schwarz->add_option("--points", M, "boundary sample count");
    schwarz->add_option("--tol", schwarz_tol, "absolute residual target");
    schwarz->add_option("--out", out_path, "JSON output path");

    CLI::App* rates = app.add_subcommand("rates", "rate predictions for an inverted ellipse");
    rates->add_option("--rho", rho)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(curve, data, method, pole_source, degrees, M, tol, out_path);
        if (table->parsed()) return run_table_cmd(rhos, out_path);
        if (schwarz->parsed()) return run_schwarz_cmd(curve, M, schwarz_tol, out_path);
        if (rates->parsed()) return run_rates_cmd(rho);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
