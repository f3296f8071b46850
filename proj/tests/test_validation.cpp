#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "coopnoma/validation.hpp"

using namespace coopnoma;

namespace {

const PropertyResult& find(const std::vector<PropertyResult>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw std::runtime_error("no property " + name);
}

}  // namespace

TEST(Validation, AllPropertiesPass) {
    const auto rs = run_validation();
    EXPECT_GE(rs.size(), 9u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.name << ": " << r.measured;
}

TEST(Validation, OtherSeedAlsoPasses) {
    for (const auto& r : run_validation({.seed = 99})) EXPECT_TRUE(r.passed) << r.name << ": " << r.measured;
}

TEST(Validation, DetectsPerturbedBessel) {
    const auto rs = run_validation({.k1_perturbation = 1e-6});
    EXPECT_FALSE(find(rs, "oracle-equivalence").passed);
    EXPECT_TRUE(find(rs, "factorization").passed);
}

TEST(Validation, ReportFormat) {
    std::ostringstream os;
    print_report(os, {{"alpha", true, "1"}, {"beta", false, "2"}});
    EXPECT_EQ(os.str(), "[PASS] alpha: 1\n[FAIL] beta: 2\n");
}

TEST(SampleValidConfig, StaysOutOfCaseC) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto cfg = sample_valid_config(rng);
        ASSERT_NO_THROW(cfg.validate());
        EXPECT_NE(classify_case(cfg), CaseLabel::CaseC);
    }
}

TEST(LogLogSlope, ExactPowerLaw) {
    const std::vector<double> x{1, 10, 100, 1000};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 / v);
    EXPECT_NEAR(loglog_slope(x, y), -1.0, 1e-12);
    EXPECT_THROW(loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
}
