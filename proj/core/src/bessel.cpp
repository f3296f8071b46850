#include "coopnoma/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coopnoma {

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr double kEps = 1e-17;
constexpr int kMaxIterations = 10000;

// Small-argument expansion
//   K1(x) = 1/x + ln(x/2) I1(x)
//           - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
double k1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 0.5 * x;  // (x/2)^(2k+1) / (k! (k+1)!) at k = 0
    double i1 = term;
    double psi_k1 = -std::numbers::egamma;  // psi(k+1)
    double psi_k2 = psi_k1 + 1.0;           // psi(k+2)
    double tail = term * (psi_k1 + psi_k2);
    for (int k = 1; k < kMaxIterations; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        psi_k1 += 1.0 / k;
        psi_k2 += 1.0 / (k + 1);
        i1 += term;
        const double inc = term * (psi_k1 + psi_k2);
        tail += inc;
        if (std::abs(inc) < kEps * std::abs(tail) && term < kEps * i1) break;
    }
    return 1.0 / x + std::log(0.5 * x) * i1 - 0.5 * tail;
}

// Steed's continued fraction for K0/K1 (Temme's CF2 at order zero). Returns
// e^x K1(x); converges quickly for x >= 2.
double k1_scaled_cf(double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < kMaxIterations; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h *= a1;
    const double k0_scaled = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    return k0_scaled * (x + 0.5 - h) / x;
}

void check_domain(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k1: argument must be positive");
}

}  // namespace

double bessel_k1_scaled(double x) {
    check_domain(x);
    if (std::isinf(x)) return 0.0;
    return x <= kSeriesLimit ? std::exp(x) * k1_series(x) : k1_scaled_cf(x);
}

double bessel_k1(double x) {
    check_domain(x);
    if (std::isinf(x)) return 0.0;
    if (x <= kSeriesLimit) return k1_series(x);
    return std::exp(-x) * k1_scaled_cf(x);
}

}  // namespace coopnoma
