#pragma once

#include <functional>

#include "coopnoma/config.hpp"

namespace coopnoma {

/// Closed-form outage approximation with every intermediate symbol.
/// In Case C only `p_out_approx` (= 1) and `case_label` are meaningful; the
/// other fields are NaN.
struct AnalyticBreakdown {
    double p_out_approx;
    double p_a;          // P{x1 decoded at UE1}
    double p_b;          // P{x2 decoded at UE2}
    CaseLabel case_label;
    double mu;
    double delta;
    double eta;          // NaN outside Case B
    double theta_r;
    double gamma_bar_1;
};

/// Relay-link gain threshold theta_r = f(R2) N0 / (P2 - f(R2) P1).
/// Throws std::domain_error in Case C (P2 <= f(R2) P1), where outage is certain.
double theta_r(const SystemConfig& cfg);

/// Direct+relayed UE1 gain threshold f(R1) N0 / P1.
double gamma_bar_1(const SystemConfig& cfg);

/// P{|h1|^2 + lambda |h_r1|^2 >= gamma_bar_1} for independent exponentials
/// with means `sigma1_sq` and `lambda_sigma_r1_sq`.
///
/// `equal_variances` selects the Erlang form (1 + g/s) e^{-g/s}. Otherwise the
/// hypoexponential form eta e^{-g/s1} + (1 - eta) e^{-g/s2} is used, evaluated
/// through expm1 so that it stays accurate as s2 -> s1.
double p_a_from_thresholds(double gamma_bar_1, double sigma1_sq, double lambda_sigma_r1_sq,
                           bool equal_variances);

/// P{lambda |h_r2|^2 (1 - theta/|h_r|^2) > theta} = mu e^{-delta} K1(mu),
/// evaluated in log space. `k1_scaled` computes e^x K1(x).
double p_b_from_thresholds(double theta, double sigma_r_sq, double lambda_sigma_r2_sq,
                           const std::function<double(double)>& k1_scaled);

double p_b_from_thresholds(double theta, double sigma_r_sq, double lambda_sigma_r2_sq);

/// UE1-side success probability. Throws std::domain_error in Case C.
double p_component_a(const SystemConfig& cfg);

/// UE2-side success probability. Throws std::domain_error in Case C.
double p_component_b(const SystemConfig& cfg);

/// Three-branch outage approximation 1 - P_A P_B (Cases A/B) or 1 (Case C).
/// Throws std::logic_error if the assembled value leaves [0, 1] by more than
/// 1e-12, which would indicate a formula error.
AnalyticBreakdown p_out_approx(const SystemConfig& cfg);

/// High-SNR coefficient: outage ~ delta_r / (P_T / N0).
double delta_r(const SystemConfig& cfg);

/// delta_r / (P_T / N0). Throws std::domain_error in Case C.
double p_out_asymptotic(const SystemConfig& cfg);

}  // namespace coopnoma
