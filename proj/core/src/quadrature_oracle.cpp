#include "coopnoma/quadrature_oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "coopnoma/analytic.hpp"

namespace coopnoma {

namespace {

constexpr double kRelTol = 1e-12;

std::string diagnostic(const char* stage, double value, double err, double tol) {
    return std::string(stage) + " did not converge: value=" + std::to_string(value) +
           " error_estimate=" + std::to_string(err) + " tolerance=" + std::to_string(tol);
}

}  // namespace

double relay_outage_by_quadrature(double theta, double sigma_r_sq, double lambda_sigma_r2_sq,
                                  double abs_tol) {
    if (!(theta > 0.0) || !(sigma_r_sq > 0.0) || !(lambda_sigma_r2_sq > 0.0)) {
        throw std::domain_error("relay_outage_by_quadrature: parameters must be positive");
    }
    boost::math::quadrature::exp_sinh<double> integrator;
    double worst_inner_error = 0.0;

    // Success needs X > theta and Z > theta X / (X - theta).
    auto inner = [&](double x) {
        if (!(x > theta)) return 0.0;
        const double z_min = theta * x / (x - theta);
        if (!std::isfinite(z_min)) return 0.0;
        auto density_z = [&](double z) { return std::exp(-z / lambda_sigma_r2_sq) / lambda_sigma_r2_sq; };
        double err = 0.0;
        const double tail = integrator.integrate(density_z, z_min, std::numeric_limits<double>::infinity(),
                                                 kRelTol, &err);
        worst_inner_error = std::max(worst_inner_error, err);
        return tail;
    };
    auto outer_integrand = [&](double x) { return std::exp(-x / sigma_r_sq) / sigma_r_sq * inner(x); };

    double err = 0.0;
    const double success = integrator.integrate(outer_integrand, theta, std::numeric_limits<double>::infinity(),
                                                kRelTol, &err);
    if (!(err <= abs_tol) || !std::isfinite(success)) {
        throw QuadratureError(diagnostic("outer integral", success, err, abs_tol));
    }
    if (!(worst_inner_error <= abs_tol)) {
        throw QuadratureError(diagnostic("inner integral", success, worst_inner_error, abs_tol));
    }
    return 1.0 - success;
}

double quadrature_oracle_b(const SystemConfig& cfg) {
    const double theta = theta_r(cfg);
    const auto v = cfg.variances();
    return relay_outage_by_quadrature(theta, v.bs_relay, cfg.lambda_relay * v.relay_ue2);
}

double bessel_k1_by_quadrature(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k1_by_quadrature: argument must be positive");
    // e^x K1(x) = int_0^inf e^{-x (cosh t - 1)} cosh t dt; the integrand is
    // below e^-60 of its peak scale past x (cosh t - 1) = 60.
    const double upper = std::acosh(1.0 + 60.0 / x);
    auto f = [x](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(t); };
    double err = 0.0;
    const double scaled =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 20, 1e-13, &err);
    if (!(err <= 1e-12 * scaled)) {
        throw QuadratureError(diagnostic("K1 integral", scaled, err, 1e-12 * scaled));
    }
    return std::exp(-x) * scaled;
}

}  // namespace coopnoma
