// Closed-form convergence-rate theory for the inverted-ellipse family:
// analyticity radius, asymptotics, degree-per-digit costs, rational rate
// bounds, and crowding estimates.
#ifndef LAPRAT_RATES_HPP
#define LAPRAT_RATES_HPP

#include <utility>

namespace laprat {

struct RatePrediction {
    double R = 0.0;       // polynomial analyticity radius, > 1
    double R_star = 0.0;  // condenser modulus when known, > 1
    double poly_factor = 0.0;  // 1/R
    double rat_factor = 0.0;   // 1/R_star^2
    double degree_per_digit_poly = 0.0;
    double degree_per_digit_rat = 0.0;
};

/// Radius of the largest disk about 0 to which the interior harmonic
/// extension is analytic, for InvertedEllipse(rho).  Quotient of two
/// theta-type series, terms truncated below 1e-18 of the partial sum.
double analyticity_radius_ie(double rho);

struct AsymptoticRadius {
    double log_form = 0.0;    // 1 + 4 e^{-pi^2 / (4 ln rho)}
    double linear_form = 0.0; // 1 + A e^{-pi^2 / (4 (rho-1))}
    double A = 0.0;           // 4 e^{-pi^2/8} = 1.16485...
};

/// Small-(rho-1) asymptotics of analyticity_radius_ie, in both the ln(rho)
/// and the (rho-1) form.
AsymptoticRadius analyticity_radius_asymptotic(double rho);

/// R - 1 evaluated without cancellation; stays accurate even when R is
/// within machine epsilon of 1 (rho close to 1, where R - 1 ~ 4e^{-pi^2/(4 ln rho)}
/// underflows the quotient form).
double analyticity_radius_gap_ie(double rho);

/// Independent oracle for analyticity_radius_ie: the same radius written as
/// a quotient of bilateral sums sum exp(-a k^2) / sum exp(-a (k+1/2)^2),
/// a = 4 ln(rho), evaluated through their Poisson-transformed images.
double theta_ratio_oracle(double rho);

/// Quotient minus 1 in the oracle's form, cancellation-free like
/// analyticity_radius_gap_ie.
double theta_ratio_gap_oracle(double rho);

/// Image of the focus z = 1 under the inverse of the exterior conformal map
/// of InvertedEllipse(rho); equals 1/analyticity_radius_ie(rho).
double focus_image(double rho);

/// ln(10)/ln(R): polynomial degrees needed per decimal digit of accuracy.
/// R <= 1 returns +infinity rather than throwing.
double degree_per_digit(double R);

/// Asymptotic polynomial cost per digit, (ln10/A) e^{(pi^2/4)/(rho-1)}.
double poly_cost_asymptotic(double rho);

/// Rate bundle for InvertedEllipse(rho): polynomial rate 1/R from the exact
/// radius, rational rate 1/rho^2 with R_star = rho.
RatePrediction rational_rate_ie(double rho);

/// Finger length L = 1/(8(rho-1)) of the inlet region; valid for
/// 1 < rho < 1.225 only.
double finger_length_ie(double rho);

/// Crowding exponent values (loose, sharp) = (e^{-pi/(8 eps)},
/// e^{-pi^2/(4 eps)}), eps = rho - 1; same validity range as finger_length_ie.
std::pair<double, double> crowding_bounds_ie(double rho);

}  // namespace laprat

#endif
