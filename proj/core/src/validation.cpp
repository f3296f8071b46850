#include "coopnoma/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>

#include "coopnoma/analytic.hpp"
#include "coopnoma/bessel.hpp"
#include "coopnoma/quadrature_oracle.hpp"
#include "coopnoma/scenario.hpp"

namespace coopnoma {

namespace {

std::string fmt_e(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fmt_f(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

SystemConfig scenario_cfg(const char* name) { return builtin_scenario(name)->cfg; }

PropertyResult oracle_equivalence(const ValidationOptions& opts) {
    const double scale = 1.0 + opts.k1_perturbation;
    const std::function<double(double)> k1_scaled = [scale](double x) { return scale * bessel_k1_scaled(x); };

    std::mt19937_64 rng(opts.seed);
    double worst_b = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto cfg = sample_valid_config(rng);
        const auto v = cfg.variances();
        const double theta = theta_r(cfg);
        const double pb = p_b_from_thresholds(theta, v.bs_relay, cfg.lambda_relay * v.relay_ue2, k1_scaled);
        worst_b = std::max(worst_b, std::abs(quadrature_oracle_b(cfg) - (1.0 - pb)));
    }

    double worst_k1 = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 49.0);
        const double k1 = scale * bessel_k1(x);
        const double ref = bessel_k1_by_quadrature(x);
        worst_k1 = std::max(worst_k1, std::abs(k1 - ref) / ref);
    }
    return {"oracle-equivalence", worst_b < 1e-6 && worst_k1 < 1e-10,
            "max |oracle - (1 - P_B)| = " + fmt_e(worst_b) + " (< 1e-6); max K1 rel err = " + fmt_e(worst_k1) +
                " (< 1e-10)"};
}

PropertyResult k1_small_argument() {
    const double x = 1e-3;
    const double dev = std::abs(x * bessel_k1(x) - 1.0);
    return {"k1-small-argument", dev < 1e-3, "|x K1(x) - 1| at x=1e-3 = " + fmt_e(dev) + " (< 1e-3)"};
}

PropertyResult branch_continuity() {
    double worst = 0.0;
    const auto base = scenario_cfg("case-a");
    const auto v = base.variances();
    for (double snr = 10.0; snr <= 40.0 + 1e-9; snr += 2.5) {
        const auto cfg = base.with_snr_db(snr);
        const double g = gamma_bar_1(cfg);
        const double ref = p_a_from_thresholds(g, v.bs_ue1, v.bs_ue1, true);
        for (double off : {-1e-5, 1e-5}) {
            const double pb = p_a_from_thresholds(g, v.bs_ue1, v.bs_ue1 * (1.0 + off), false);
            worst = std::max(worst, std::abs(pb - ref));
        }
    }
    return {"branch-continuity", worst < 1e-4, "max |P_A(B) - P_A(A)| at 1e-5 offset = " + fmt_e(worst) + " (< 1e-4)"};
}

PropertyResult factorization_and_range(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    double worst = 0.0;
    bool in_range = true;
    for (int i = 0; i < 10000; ++i) {
        const auto b = p_out_approx(sample_valid_config(rng));
        worst = std::max(worst, std::abs((1.0 - b.p_out_approx) - b.p_a * b.p_b));
        in_range = in_range && b.p_out_approx >= 0.0 && b.p_out_approx <= 1.0 && b.p_a >= 0.0 && b.p_a <= 1.0 &&
                   b.p_b >= 0.0 && b.p_b <= 1.0;
    }
    const double eps10 = 10.0 * std::numeric_limits<double>::epsilon();
    return {"factorization", worst <= eps10 && in_range,
            "max |(1 - P_out^A) - P_A P_B| = " + fmt_e(worst) + " (<= 10 eps); all probabilities in [0,1]: " +
                (in_range ? "yes" : "no")};
}

PropertyResult diversity_order() {
    const auto base = scenario_cfg("case-b1");
    std::vector<double> snr, pout;
    for (double db = 50.0; db <= 70.0 + 1e-9; db += 1.0) {
        const auto cfg = base.with_snr_db(db);
        snr.push_back(cfg.transmit_snr());
        pout.push_back(p_out_approx(cfg).p_out_approx);
    }
    const double slope = loglog_slope(snr, pout);
    return {"diversity-order", slope >= -1.05 && slope <= -0.95,
            "slope of log P_out^A vs log SNR over 50-70 dB = " + fmt_f(slope) + " (in [-1.05, -0.95])"};
}

PropertyResult asymptote_consistency() {
    std::string measured;
    bool ok = true;
    for (const char* name : {"case-a", "case-b1", "case-b2"}) {
        const auto cfg = scenario_cfg(name).with_snr_db(60.0);
        const double ratio = p_out_asymptotic(cfg) / p_out_approx(cfg).p_out_approx;
        ok = ok && ratio >= 0.95 && ratio <= 1.05;
        measured += std::string(measured.empty() ? "" : ", ") + name + "=" + fmt_f(ratio);
    }
    return {"asymptote-consistency", ok, "asymptote/approx at 60 dB: " + measured + " (in [0.95, 1.05])"};
}

PropertyResult relay_location(std::uint64_t seed) {
    // Smaller sigma_r^2 than sigma_r2^2 at a fixed product means the relay
    // sits nearer UE2; with lambda < 1 that gives the smaller delta_r.
    const double near_ue2 = delta_r(scenario_cfg("case-b2"));
    const double near_bs = delta_r(scenario_cfg("case-b1"));
    bool ok = near_ue2 < near_bs;
    std::mt19937_64 rng(seed + 2);
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        auto cfg = sample_valid_config(rng);
        cfg.lambda_relay = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        if (cfg.d_bs_relay == cfg.d_relay_ue2) continue;
        // Relay nearer UE2 <=> larger BS-relay distance.
        auto near = cfg;
        auto far = cfg;
        near.d_bs_relay = std::max(cfg.d_bs_relay, cfg.d_relay_ue2);
        near.d_relay_ue2 = std::min(cfg.d_bs_relay, cfg.d_relay_ue2);
        far.d_bs_relay = near.d_relay_ue2;
        far.d_relay_ue2 = near.d_bs_relay;
        if (!(delta_r(near) < delta_r(far))) ++violations;
    }
    ok = ok && violations == 0;
    return {"relay-location", ok,
            "delta_r relay near UE2 (case-b2) = " + fmt_f(near_ue2) + ", near BS (case-b1) = " + fmt_f(near_bs) +
                "; random swapped pairs violating = " + std::to_string(violations)};
}

PropertyResult theta_consistency(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 3);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto cfg = sample_valid_config(rng);
        const auto v = cfg.variances();
        const double lhs = theta_r(cfg) * (1.0 / v.bs_relay + 1.0 / (cfg.lambda_relay * v.relay_ue2));
        const double rhs = delta_r(cfg) / cfg.transmit_snr();
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    return {"theta-r-consistency", worst < 1e-12,
            "max rel |theta_r (1/s_r + 1/(lambda s_r2)) - delta_r/snr| = " + fmt_e(worst)};
}

PropertyResult snr_monotonicity() {
    bool ok = true;
    for (const char* name : {"case-a", "case-b1", "case-b2"}) {
        double prev = 2.0;
        const auto base = scenario_cfg(name);
        for (double db = 10.0; db <= 40.0 + 1e-9; db += 0.5) {
            const double p = p_out_approx(base.with_snr_db(db)).p_out_approx;
            ok = ok && p <= prev;
            prev = p;
        }
    }
    return {"snr-monotonicity", ok, "P_out^A non-increasing over 10-40 dB for cases A, B-I, B-II"};
}

}  // namespace

SystemConfig sample_valid_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SystemConfig cfg;
    cfg.noise_power = 1.0;
    cfg.total_power = db_to_linear(50.0 * unit(rng));
    cfg.lambda_relay = 0.05 + 1.95 * unit(rng);
    cfg.rate_ue1 = 0.1 + 1.9 * unit(rng);
    cfg.rate_ue2 = 0.1 + 1.1 * unit(rng);
    cfg.d_bs_ue1 = log_uniform(rng, 5.0, 100.0);
    cfg.d_bs_relay = log_uniform(rng, 5.0, 100.0);
    cfg.d_relay_ue1 = log_uniform(rng, 5.0, 100.0);
    cfg.d_relay_ue2 = log_uniform(rng, 5.0, 100.0);
    cfg.d_ref = 20.0;
    cfg.path_loss_exp = 2.0 + 2.0 * unit(rng);
    // Case A/B needs (1 - l1)/l1 > f(R2), i.e. l1 < 1/(1 + f(R2)); also l1 < 0.5.
    const double l1_max = std::min(0.5, 1.0 / (1.0 + rate_threshold(cfg.rate_ue2)));
    cfg.lambda1 = l1_max * (0.05 + 0.9 * unit(rng));
    cfg.validate();
    return cfg;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log10(x[i]);
        const double ly = std::log10(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<PropertyResult> run_validation(const ValidationOptions& opts) {
    std::vector<PropertyResult> out;
    auto guarded = [&out](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("error: ") + e.what()});
        }
    };
    guarded("oracle-equivalence", [&] { return oracle_equivalence(opts); });
    guarded("k1-small-argument", [] { return k1_small_argument(); });
    guarded("branch-continuity", [] { return branch_continuity(); });
    guarded("factorization", [&] { return factorization_and_range(opts.seed); });
    guarded("diversity-order", [] { return diversity_order(); });
    guarded("asymptote-consistency", [] { return asymptote_consistency(); });
    guarded("relay-location", [&] { return relay_location(opts.seed); });
    guarded("theta-r-consistency", [&] { return theta_consistency(opts.seed); });
    guarded("snr-monotonicity", [] { return snr_monotonicity(); });
    return out;
}

void print_report(std::ostream& out, const std::vector<PropertyResult>& results) {
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.measured << '\n';
    }
}

}  // namespace coopnoma
