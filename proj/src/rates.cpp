#include "laprat/rates.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace laprat {

namespace {

constexpr int kMaxTerms = 10000;

// sum_{k>=start} rho^{-(k + offset)^2} over k stepping by 2, truncated when a
// term drops below 1e-18 of the partial sum.
double lacunary_sum(double rho, int start, int step, double seed) {
    double sum = seed;
    for (int k = start; k <= kMaxTerms; k += step) {
        const double term = std::pow(rho, -static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) return sum;
    }
    throw std::runtime_error("lacunary_sum: series unconverged after 1e4 terms");
}

void require_rho(double rho) {
    if (!(rho > 1.0)) throw std::domain_error("rates: require rho > 1");
}

}  // namespace

namespace {

// num - den = 1/2 sum_{k in Z} (-1)^k rho^{-k^2}, evaluated through the Jacobi
// transform sqrt(pi/b) sum_{k>=0} e^{-pi^2 (k+1/2)^2 / b}, b = ln rho.  The
// direct difference cancels catastrophically as rho -> 1 (the gap falls below
// machine epsilon near rho = 1.09) while the transformed series stays exact.
double radius_gap_ie(double rho) {
    const double b = std::log(rho);
    double sum = 0.0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        const double h = k + 0.5;
        const double term = std::exp(-std::numbers::pi * std::numbers::pi * h * h / b);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return std::sqrt(std::numbers::pi / b) * sum;
}

}  // namespace

double analyticity_radius_ie(double rho) {
    require_rho(rho);
    const double den = lacunary_sum(rho, 1, 2, 0.0);  // rho^-1 + rho^-9 + ...
    return (den + radius_gap_ie(rho)) / den;
}

double analyticity_radius_gap_ie(double rho) {
    require_rho(rho);
    return radius_gap_ie(rho) / lacunary_sum(rho, 1, 2, 0.0);
}

AsymptoticRadius analyticity_radius_asymptotic(double rho) {
    require_rho(rho);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    AsymptoticRadius out;
    out.A = 4.0 * std::exp(-pi2 / 8.0);
    out.log_form = 1.0 + 4.0 * std::exp(-pi2 / (4.0 * std::log(rho)));
    out.linear_form = 1.0 + out.A * std::exp(-pi2 / (4.0 * (rho - 1.0)));
    return out;
}

double theta_ratio_oracle(double rho) {
    require_rho(rho);
    // Poisson summation turns the doubled bilateral Gaussian sums
    // sum e^{-a k^2} and sum e^{-a (k+1/2)^2}, a = 4 ln rho, into the pair
    // sum q^{k^2} and sum (-1)^k q^{k^2} with q = e^{-pi^2/a}; the common
    // sqrt(pi/a) prefactor cancels in the quotient.  This form keeps the
    // quotient's distance from 1 representable for rho near 1.
    const double a = 4.0 * std::log(rho);
    const double lq = -std::numbers::pi * std::numbers::pi / a;
    double num = 1.0, den = 1.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double term = 2.0 * std::exp(lq * k * k);
        num += term;
        den += (k % 2) ? -term : term;
        if (term < 1e-18 * num) break;
    }
    return num / den;
}

double theta_ratio_gap_oracle(double rho) {
    require_rho(rho);
    // num/den - 1 = (num - den)/den; the difference keeps only the odd-k
    // terms, so no cancellation occurs even when the quotient rounds to 1.
    const double a = 4.0 * std::log(rho);
    const double lq = -std::numbers::pi * std::numbers::pi / a;
    double diff = 0.0, den = 1.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double term = 2.0 * std::exp(lq * k * k);
        den += (k % 2) ? -term : term;
        if (k % 2) diff += 2.0 * term;
        if (term < 1e-18 * den) break;
    }
    return diff / den;
}

double focus_image(double rho) {
    require_rho(rho);
    const double den = lacunary_sum(rho, 1, 2, 0.0);
    return den / (den + radius_gap_ie(rho));
}

double degree_per_digit(double R) {
    if (R <= 1.0) return std::numeric_limits<double>::infinity();
    return std::log(10.0) / std::log(R);
}

double poly_cost_asymptotic(double rho) {
    require_rho(rho);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double A = 4.0 * std::exp(-pi2 / 8.0);
    return std::log(10.0) / A * std::exp((pi2 / 4.0) / (rho - 1.0));
}

RatePrediction rational_rate_ie(double rho) {
    require_rho(rho);
    RatePrediction p;
    p.R = analyticity_radius_ie(rho);
    p.R_star = rho;
    p.poly_factor = 1.0 / p.R;
    p.rat_factor = 1.0 / (rho * rho);
    p.degree_per_digit_poly = degree_per_digit(p.R);
    p.degree_per_digit_rat = std::log(10.0) / (2.0 * std::log(rho));
    return p;
}

namespace {
void require_crowding_range(double rho) {
    if (!(rho > 1.0 && rho < 1.225))
        throw std::domain_error("rates: finger/crowding formulas require 1 < rho < 1.225");
}
}  // namespace

double finger_length_ie(double rho) {
    require_crowding_range(rho);
    return 1.0 / (8.0 * (rho - 1.0));
}

std::pair<double, double> crowding_bounds_ie(double rho) {
    require_crowding_range(rho);
    const double eps = rho - 1.0;
    const double pi = std::numbers::pi;
    return {std::exp(-pi / (8.0 * eps)), std::exp(-pi * pi / (4.0 * eps))};
}

}  // namespace laprat
