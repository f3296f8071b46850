#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "coopnoma/config.hpp"

namespace coopnoma {

/// Random valid config outside Case C, for property checks. Distances are
/// log-uniform in [5, 100] m, lambda in [0.05, 2], rates in [0.1, 2] and
/// [0.1, 1.2], SNR in [0, 50] dB, lambda1 strictly inside the decodable range.
SystemConfig sample_valid_config(std::mt19937_64& rng);

/// Least-squares slope of log10(y) against log10(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string measured;
};

struct ValidationOptions {
    std::uint64_t seed = 20170305;
    /// Relative error injected into K1 wherever the suite evaluates it. Used
    /// to confirm that the checks are sensitive; 0 in normal runs.
    double k1_perturbation = 0.0;
};

/// Closed-form property suite: oracle equivalence, branch continuity,
/// factorisation, probability range, diversity order, asymptote consistency,
/// relay-location ordering, theta_r consistency, SNR monotonicity.
std::vector<PropertyResult> run_validation(const ValidationOptions& opts = {});

void print_report(std::ostream& out, const std::vector<PropertyResult>& results);

}  // namespace coopnoma
