#include "coopnoma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coopnoma/bessel.hpp"

namespace coopnoma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRangeSlack = 1e-12;

void require_not_case_c(const SystemConfig& cfg, const char* who) {
    cfg.validate();
    const double f2 = rate_threshold(cfg.rate_ue2);
    if (cfg.power_ue2() <= f2 * cfg.power_ue1()) {
        throw std::domain_error(std::string(who) + ": outage-certain region (P2/P1 <= f(R2))");
    }
}

void check_probability(double p, const char* what) {
    if (!(p >= -kRangeSlack && p <= 1.0 + kRangeSlack)) {
        throw std::logic_error(std::string(what) + " = " + std::to_string(p) + " lies outside [0, 1]");
    }
}

}  // namespace

double theta_r(const SystemConfig& cfg) {
    require_not_case_c(cfg, "theta_r");
    const double f2 = rate_threshold(cfg.rate_ue2);
    return f2 * cfg.noise_power / (cfg.power_ue2() - f2 * cfg.power_ue1());
}

double gamma_bar_1(const SystemConfig& cfg) {
    if (!(cfg.power_ue1() > 0.0)) throw std::domain_error("gamma_bar_1: P1 must be positive");
    return rate_threshold(cfg.rate_ue1) * cfg.noise_power / cfg.power_ue1();
}

double p_a_from_thresholds(double gbar1, double s1, double s2, bool equal_variances) {
    if (equal_variances) {
        const double a = gbar1 / s1;
        return (1.0 + a) * std::exp(-a);
    }
    // eta e^{-g/s1} + (1-eta) e^{-g/s2} with eta = s1/(s1-s2) is symmetric in
    // (s1, s2). With s_hi >= s_lo and d = 1/s_lo - 1/s_hi >= 0 it equals
    //   e^{-g/s_hi} [1 + (g/s_hi) (1 - e^{-g d}) / (g d)].
    const double s_hi = std::max(s1, s2);
    const double s_lo = std::min(s1, s2);
    const double a = gbar1 / s_hi;
    const double gd = gbar1 * (1.0 / s_lo - 1.0 / s_hi);
    const double ratio = gd == 0.0 ? 1.0 : -std::expm1(-gd) / gd;
    return std::exp(-a) * (1.0 + a * ratio);
}

double p_b_from_thresholds(double theta, double sigma_r_sq, double lambda_sigma_r2_sq,
                           const std::function<double(double)>& k1_scaled) {
    const double mu = 2.0 * theta / std::sqrt(sigma_r_sq * lambda_sigma_r2_sq);
    const double delta = theta / sigma_r_sq + theta / lambda_sigma_r2_sq;
    if (mu == 0.0) return 1.0;
    // mu K1(mu) e^{-delta} = exp(log mu + log(e^mu K1(mu)) - mu - delta)
    return std::exp(std::log(mu) + std::log(k1_scaled(mu)) - mu - delta);
}

double p_b_from_thresholds(double theta, double sigma_r_sq, double lambda_sigma_r2_sq) {
    return p_b_from_thresholds(theta, sigma_r_sq, lambda_sigma_r2_sq, bessel_k1_scaled);
}

double p_component_a(const SystemConfig& cfg) {
    require_not_case_c(cfg, "p_component_a");
    const auto v = cfg.variances();
    const bool equal = classify_case(cfg) == CaseLabel::CaseA;
    const double p = p_a_from_thresholds(gamma_bar_1(cfg), v.bs_ue1, cfg.lambda_relay * v.relay_ue1, equal);
    check_probability(p, "P_A");
    return p;
}

double p_component_b(const SystemConfig& cfg) {
    const double theta = theta_r(cfg);
    const auto v = cfg.variances();
    const double p = p_b_from_thresholds(theta, v.bs_relay, cfg.lambda_relay * v.relay_ue2);
    check_probability(p, "P_B");
    return p;
}

AnalyticBreakdown p_out_approx(const SystemConfig& cfg) {
    AnalyticBreakdown out{1.0, kNaN, kNaN, classify_case(cfg), kNaN, kNaN, kNaN, kNaN, kNaN};
    if (out.case_label == CaseLabel::CaseC) return out;

    const auto v = cfg.variances();
    const double lam = cfg.lambda_relay;
    out.theta_r = theta_r(cfg);
    out.gamma_bar_1 = gamma_bar_1(cfg);
    out.mu = 2.0 * out.theta_r / std::sqrt(lam * v.bs_relay * v.relay_ue2);
    out.delta = out.theta_r / v.bs_relay + out.theta_r / (lam * v.relay_ue2);
    if (out.case_label == CaseLabel::CaseB) out.eta = v.bs_ue1 / (v.bs_ue1 - lam * v.relay_ue1);

    out.p_a = p_component_a(cfg);
    out.p_b = p_component_b(cfg);
    out.p_out_approx = 1.0 - out.p_a * out.p_b;
    check_probability(out.p_out_approx, "P_out^A");
    return out;
}

double delta_r(const SystemConfig& cfg) {
    require_not_case_c(cfg, "delta_r");
    const auto v = cfg.variances();
    const double f2 = rate_threshold(cfg.rate_ue2);
    return f2 / (1.0 - cfg.lambda1 * (1.0 + f2)) *
           (1.0 / v.bs_relay + 1.0 / (cfg.lambda_relay * v.relay_ue2));
}

double p_out_asymptotic(const SystemConfig& cfg) { return delta_r(cfg) / cfg.transmit_snr(); }

}  // namespace coopnoma
