#pragma once

#include <stdexcept>

#include "coopnoma/config.hpp"

namespace coopnoma {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// P{Z (1 - theta/X) <= theta} for independent X ~ Exp(mean sigma_r_sq) and
/// Z ~ Exp(mean lambda_sigma_r2_sq), by nested adaptive quadrature over the
/// two densities. Uses no special functions, so it serves as an independent
/// check on the Bessel closed form. Throws QuadratureError if the estimated
/// error exceeds `abs_tol`.
double relay_outage_by_quadrature(double theta, double sigma_r_sq, double lambda_sigma_r2_sq,
                                  double abs_tol = 1e-8);

/// The same event for `cfg` (theta_r and variances taken from it).
/// Throws std::domain_error in Case C.
double quadrature_oracle_b(const SystemConfig& cfg);

/// K1(x) from its integral representation  int_0^inf e^{-x cosh t} cosh t dt.
double bessel_k1_by_quadrature(double x);

}  // namespace coopnoma
