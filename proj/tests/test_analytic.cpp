#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "coopnoma/analytic.hpp"
#include "coopnoma/quadrature_oracle.hpp"
#include "coopnoma/scenario.hpp"
#include "coopnoma/validation.hpp"

using namespace coopnoma;

namespace {

SystemConfig scenario(const char* name, double snr_db) { return builtin_scenario(name)->cfg.with_snr_db(snr_db); }

// Literal two-exponential form, used as an independent check of the
// rearranged Case B evaluation.
double p_a_eta_form(double g, double s1, double s2) {
    const double eta = s1 / (s1 - s2);
    return eta * std::exp(-g / s1) + (1.0 - eta) * std::exp(-g / s2);
}

}  // namespace

TEST(ThetaR, ClosedFormValue) {
    auto cfg = scenario("case-b1", 30.0);
    EXPECT_NEAR(theta_r(cfg), 0.00347104363617313268, 1e-15);
}

TEST(ThetaR, BoundaryScaling) {
    // With P2 = 2 f(R2) P1, theta_r = f(R2) N0 / (f(R2) P1) = N0 / P1.
    SystemConfig cfg;
    const double f2 = rate_threshold(cfg.rate_ue2);
    cfg.lambda1 = 1.0 / (1.0 + 2.0 * f2);
    EXPECT_NEAR(theta_r(cfg), f2 * cfg.noise_power / (f2 * cfg.power_ue1()), 1e-15);
}

TEST(ThetaR, CaseCIsAnError) {
    SystemConfig cfg;
    cfg.lambda1 = 0.4;
    EXPECT_THROW(theta_r(cfg), std::domain_error);
    EXPECT_THROW(p_component_a(cfg), std::domain_error);
    EXPECT_THROW(p_component_b(cfg), std::domain_error);
    EXPECT_THROW(p_out_asymptotic(cfg), std::domain_error);
    EXPECT_THROW(quadrature_oracle_b(cfg), std::domain_error);
}

TEST(ThetaR, ConsistentWithAsymptoteCoefficient) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto cfg = sample_valid_config(rng);
        const auto v = cfg.variances();
        const double lhs = theta_r(cfg) * (1.0 / v.bs_relay + 1.0 / (cfg.lambda_relay * v.relay_ue2));
        EXPECT_NEAR(lhs / (delta_r(cfg) / cfg.transmit_snr()), 1.0, 1e-12);
    }
}

TEST(GammaBar1, Values) {
    SystemConfig cfg;
    cfg.total_power = 1000.0;
    EXPECT_NEAR(gamma_bar_1(cfg), 0.015, 1e-16);
    auto doubled = cfg;
    doubled.total_power *= 2;
    EXPECT_NEAR(gamma_bar_1(doubled), gamma_bar_1(cfg) / 2, 1e-17);
    // R1 = 0 is below the config invariant, so check the formula directly.
    EXPECT_EQ(p_a_from_thresholds(0.0, 0.4, 0.2, false), 1.0);
    EXPECT_EQ(p_a_from_thresholds(0.0, 0.4, 0.4, true), 1.0);
}

TEST(PComponentA, Limits) {
    EXPECT_LT(p_a_from_thresholds(1e4, 0.4, 0.2, false), 1e-300);
    EXPECT_LT(p_a_from_thresholds(1e4, 0.4, 0.4, true), 1e-300);
}

TEST(PComponentA, MatchesLiteralEtaForm) {
    for (double g : {1e-4, 0.01, 0.3, 2.0}) {
        for (auto [s1, s2] : {std::pair{0.4444, 0.1}, {0.4444, 0.9}, {2.0, 0.05}, {0.1, 3.0}}) {
            EXPECT_NEAR(p_a_from_thresholds(g, s1, s2, false), p_a_eta_form(g, s1, s2), 1e-13);
        }
    }
}

TEST(PComponentA, ContinuousAcrossBranchBoundary) {
    const double s1 = 4.0 / 9.0;
    for (double snr = 10; snr <= 40; snr += 2.5) {
        const double g = rate_threshold(1.0) / (0.2 * db_to_linear(snr));
        const double case_a = p_a_from_thresholds(g, s1, s1, true);
        for (double off : {1e-3, 1e-4, 1e-5}) {
            for (double sign : {-1.0, 1.0}) {
                const double s2 = s1 * (1 + sign * off);
                EXPECT_NEAR(p_a_from_thresholds(g, s1, s2, false), case_a, 2 * off);
                EXPECT_NEAR(p_a_eta_form(g, s1, s2), case_a, 2 * off);
            }
        }
        // Convergence: the gap shrinks with the offset.
        const double gap3 = std::abs(p_a_from_thresholds(g, s1, s1 * 1.001, false) - case_a);
        const double gap5 = std::abs(p_a_from_thresholds(g, s1, s1 * 1.00001, false) - case_a);
        EXPECT_LE(gap5, gap3);
    }
}

TEST(PComponentB, Limits) {
    EXPECT_NEAR(p_b_from_thresholds(1e-12, 0.4, 0.06), 1.0, 1e-9);
    EXPECT_EQ(p_b_from_thresholds(0.0, 0.4, 0.06), 1.0);
    EXPECT_LT(p_b_from_thresholds(1e3, 0.4, 0.06), 1e-300);
}

TEST(PComponentB, PinnedAgainstTwoDimensionalQuadrature) {
    // Case B-I at 30 dB; reference from a 20-digit 2-D quadrature.
    const auto cfg = scenario("case-b1", 30.0);
    EXPECT_NEAR(p_component_b(cfg), 0.93254515352579185351, 1e-12);
    EXPECT_NEAR(quadrature_oracle_b(cfg), 1.0 - 0.93254515352579185351, 1e-9);
}

TEST(QuadratureOracle, RegressionPin) {
    // sigma_r^2 = lambda sigma_r2^2 = 1, theta = 1.
    EXPECT_NEAR(relay_outage_by_quadrature(1.0, 1.0, 1.0), 0.96214242253844468085, 1e-9);
}

TEST(QuadratureOracle, VanishingThreshold) {
    EXPECT_LT(relay_outage_by_quadrature(1e-9, 0.44, 0.06), 1e-6);
}

TEST(QuadratureOracle, AgreesWithClosedFormOnRandomConfigs) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const auto cfg = sample_valid_config(rng);
        EXPECT_LT(std::abs(quadrature_oracle_b(cfg) - (1.0 - p_component_b(cfg))), 1e-6);
    }
}

TEST(QuadratureOracle, RejectsBadParameters) {
    EXPECT_THROW(relay_outage_by_quadrature(0.0, 1.0, 1.0), std::domain_error);
    EXPECT_THROW(relay_outage_by_quadrature(1.0, -1.0, 1.0), std::domain_error);
}

TEST(POutApprox, CaseC) {
    const auto b = p_out_approx(scenario("case-c", 30.0));
    EXPECT_EQ(b.case_label, CaseLabel::CaseC);
    EXPECT_EQ(b.p_out_approx, 1.0);
    EXPECT_TRUE(std::isnan(b.p_a));
    EXPECT_TRUE(std::isnan(b.p_b));
}

TEST(POutApprox, BreakdownFields) {
    const auto cfg = scenario("case-b1", 30.0);
    const auto b = p_out_approx(cfg);
    EXPECT_EQ(b.case_label, CaseLabel::CaseB);
    EXPECT_GT(b.mu, 0.0);
    EXPECT_GT(b.delta, 0.0);
    EXPECT_GT(b.theta_r, 0.0);
    const double s1 = 4.0 / 9.0, ls1 = 0.3 * 4.0 / 9.0;
    EXPECT_NEAR(b.eta, s1 / (s1 - ls1), 1e-14);
    EXPECT_NEAR(b.mu, 2 * b.theta_r / std::sqrt(0.3 * (4.0 / 9.0) * (16.0 / 81.0)), 1e-15);
    EXPECT_NEAR(b.gamma_bar_1, 0.015, 1e-15);
    EXPECT_EQ(b.p_out_approx, 1.0 - b.p_a * b.p_b);

    const auto a = p_out_approx(scenario("case-a", 30.0));
    EXPECT_EQ(a.case_label, CaseLabel::CaseA);
    EXPECT_TRUE(std::isnan(a.eta));
}

TEST(POutApprox, VanishesAtHighSnr) {
    EXPECT_LT(p_out_approx(scenario("case-b1", 100.0)).p_out_approx, 1e-7);
}

TEST(POutApprox, NonIncreasingInPower) {
    for (const char* name : {"case-a", "case-b1", "case-b2"}) {
        double prev = 1.0;
        for (double db = 10; db <= 40; db += 0.25) {
            const double p = p_out_approx(scenario(name, db)).p_out_approx;
            EXPECT_LE(p, prev) << name << " " << db;
            prev = p;
        }
    }
}

TEST(POutApprox, ProbabilitiesInRangeAndFactorised) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 10000; ++i) {
        const auto b = p_out_approx(sample_valid_config(rng));
        ASSERT_GE(b.p_out_approx, 0.0);
        ASSERT_LE(b.p_out_approx, 1.0);
        ASSERT_GE(b.p_a, 0.0);
        ASSERT_LE(b.p_a, 1.0);
        ASSERT_GE(b.p_b, 0.0);
        ASSERT_LE(b.p_b, 1.0);
        ASSERT_LE(std::abs((1.0 - b.p_out_approx) - b.p_a * b.p_b), 10 * std::numeric_limits<double>::epsilon());
    }
}

TEST(Asymptote, FrozenDeltaR) {
    // f(R2)/(1 - lambda1 (1 + f(R2))) * (1/sigma_r^2 + 1/(lambda sigma_r2^2)), 30-digit evaluation.
    EXPECT_NEAR(delta_r(scenario("case-b1", 30.0)), 66.3837095418111624733, 1e-11);
}

TEST(Asymptote, InverseInSnr) {
    const auto cfg = scenario("case-b1", 30.0);
    auto doubled = cfg;
    doubled.total_power *= 2;
    EXPECT_NEAR(p_out_asymptotic(doubled), p_out_asymptotic(cfg) / 2, 1e-16);
}

TEST(Asymptote, RatioToApproximationAtHighSnr) {
    for (const char* name : {"case-a", "case-b1", "case-b2"}) {
        const auto cfg = scenario(name, 60.0);
        const double ratio = p_out_asymptotic(cfg) / p_out_approx(cfg).p_out_approx;
        EXPECT_GT(ratio, 0.95) << name;
        EXPECT_LT(ratio, 1.05) << name;
    }
}

TEST(Asymptote, DiversityOrderOne) {
    std::vector<double> snr, p;
    for (double db = 50; db <= 70; db += 0.5) {
        const auto cfg = scenario("case-b1", db);
        snr.push_back(cfg.transmit_snr());
        p.push_back(p_out_approx(cfg).p_out_approx);
    }
    EXPECT_NEAR(loglog_slope(snr, p), -1.0, 0.05);
}

TEST(Asymptote, RelayNearUe2HasSmallerCoefficient) {
    EXPECT_LT(delta_r(scenario("case-b2", 30)), delta_r(scenario("case-b1", 30)));
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto cfg = sample_valid_config(rng);
        cfg.lambda_relay = 0.05 + 0.9 * u(rng);
        const double a = cfg.d_bs_relay, b = cfg.d_relay_ue2;
        if (a == b) continue;
        auto near_ue2 = cfg, near_bs = cfg;
        near_ue2.d_bs_relay = std::max(a, b);
        near_ue2.d_relay_ue2 = std::min(a, b);
        near_bs.d_bs_relay = std::min(a, b);
        near_bs.d_relay_ue2 = std::max(a, b);
        const auto vn = near_ue2.variances(), vb = near_bs.variances();
        ASSERT_NEAR(vn.bs_relay * vn.relay_ue2, vb.bs_relay * vb.relay_ue2, 1e-12 * vn.bs_relay * vn.relay_ue2);
        EXPECT_LT(delta_r(near_ue2), delta_r(near_bs));
    }
}
