#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coopnoma/config.hpp"
#include "coopnoma/montecarlo.hpp"
#include "coopnoma/oma.hpp"

namespace coopnoma {

/// A named experiment: physical parameters plus the SNR grid and MC settings.
struct Scenario {
    std::string name;
    SystemConfig cfg;
    std::vector<double> snr_grid_db;
    std::uint64_t n_trials = kDefaultTrials;
    std::uint64_t seed = 1;

    /// Throws ConfigError.
    void validate() const;
};

/// Built-in scenarios: case-a, case-b1, case-b2, case-c.
const std::vector<std::string>& builtin_scenario_names();
std::optional<Scenario> builtin_scenario(std::string_view name);

/// Scenario file: the config keys plus `name`, `snr_grid_db` (comma
/// separated, ascending), and optionally `n_trials` and `seed`.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// A built-in name, or else a path to a scenario file.
Scenario resolve_scenario(std::string_view name_or_path);

/// Inclusive grid from..to in steps of `step` dB.
std::vector<double> snr_grid(double from_db, double to_db, double step_db);

inline constexpr std::string_view kCurveCsvHeader =
    "scenario,snr_db,n_trials,pout_mc,pout_mc_ci95,pout_ue1_mc,pout_ue2_mc,pout_lb_mc,"
    "pout_approx,p_a,p_b,pout_asymp,case_label";

inline constexpr std::string_view kOmaCsvHeader =
    "scenario,snr_db,n_trials,pout_noma_mc,pout_noma_ci95,pout_oma_mc,pout_oma_ci95,"
    "lambda1_oma,oma_local_minima";

/// What a curve run computes; columns that are not computed print as `nan`.
enum class CurveKind { MonteCarlo, Analytic, Combined };

std::vector<SweepRow> run_curve(const Scenario& s, CurveKind kind, unsigned workers = 0);

void write_curve_csv(std::ostream& out, std::string_view scenario, const std::vector<SweepRow>& rows);

/// Combined MC + closed-form curve as CSV text, header included.
std::string run_scenario(const Scenario& s, unsigned workers = 0);

struct OmaComparisonRow {
    double snr_db;
    OutageEstimate noma;
    OmaOptimum oma;
};

std::vector<OmaComparisonRow> compare_oma(const Scenario& s, double grid_step = 0.01, unsigned workers = 0);

void write_oma_csv(std::ostream& out, std::string_view scenario, const std::vector<OmaComparisonRow>& rows);

/// Number formatting used in every CSV: "%.12g", NaN as "nan".
std::string format_number(double v);

}  // namespace coopnoma
