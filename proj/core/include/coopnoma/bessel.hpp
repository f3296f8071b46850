#pragma once

namespace coopnoma {

/// Modified Bessel function of the second kind, order one.
/// Relative accuracy ~1e-14 on (0, 700]; returns 0 once e^-x underflows.
/// Throws std::domain_error for x <= 0.
double bessel_k1(double x);

/// e^x K1(x), finite for every x > 0.
double bessel_k1_scaled(double x);

}  // namespace coopnoma
