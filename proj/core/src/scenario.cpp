#include "coopnoma/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace coopnoma {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Scenario baseline_scenario(std::string name) {
    Scenario s;
    s.name = std::move(name);
    s.cfg = SystemConfig{};  // defaults are the Case B-I parameters
    s.snr_grid_db = snr_grid(10.0, 35.0, 5.0);
    s.n_trials = kDefaultTrials;
    s.seed = 1;
    return s;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError(std::string(key), "not a non-negative integer: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_grid(std::string_view text) {
    std::vector<double> grid;
    while (true) {
        const auto comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
        grid.push_back(parse_double("snr_grid_db", item));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return grid;
}

OutageEstimate nan_estimate() {
    OutageEstimate e;
    e.p_overall = e.p_ue1 = e.p_ue2 = e.ci_halfwidth_95 = kNaN;
    return e;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void Scenario::validate() const {
    if (name.empty()) throw ConfigError("name", "must not be empty");
    if (snr_grid_db.empty()) throw ConfigError("snr_grid_db", "must not be empty");
    if (!std::ranges::is_sorted(snr_grid_db)) throw ConfigError("snr_grid_db", "must be sorted ascending");
    if (!std::ranges::all_of(snr_grid_db, [](double v) { return std::isfinite(v); })) {
        throw ConfigError("snr_grid_db", "entries must be finite");
    }
    if (n_trials < 1) throw ConfigError("n_trials", "must be at least 1");
    cfg.validate();
}

std::vector<double> snr_grid(double from_db, double to_db, double step_db) {
    if (!(step_db > 0.0)) throw ConfigError("snr-step", "must be positive");
    if (!(to_db >= from_db)) throw ConfigError("snr-to", "must not be below snr-from");
    std::vector<double> grid;
    // Index-based so the points do not accumulate rounding drift.
    const auto n = static_cast<long>(std::floor((to_db - from_db) / step_db + 1e-9));
    for (long i = 0; i <= n; ++i) grid.push_back(from_db + static_cast<double>(i) * step_db);
    return grid;
}

const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> names{"case-a", "case-b1", "case-b2", "case-c"};
    return names;
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
    if (name == "case-b1") return baseline_scenario("case-b1");
    if (name == "case-b2") {
        auto s = baseline_scenario("case-b2");
        s.cfg.d_bs_relay = 45.0;
        s.cfg.d_relay_ue2 = 30.0;
        return s;
    }
    if (name == "case-a") {
        auto s = baseline_scenario("case-a");
        // Solves lambda (d_r1/d0)^-alpha = (d1/d0)^-alpha for d_r1 (about 16.43 m).
        s.cfg.d_relay_ue1 = s.cfg.d_bs_ue1 * std::pow(s.cfg.lambda_relay, 1.0 / s.cfg.path_loss_exp);
        return s;
    }
    if (name == "case-c") {
        auto s = baseline_scenario("case-c");
        s.cfg.lambda1 = 0.4;
        return s;
    }
    return std::nullopt;
}

Scenario parse_scenario(std::string_view text) {
    const auto kv = parse_key_values(text);
    Scenario s;
    s.cfg = config_from_key_values(kv, {"name", "snr_grid_db", "n_trials", "seed"});

    const auto name = kv.find("name");
    if (name == kv.end()) throw ConfigError("name", "missing key");
    s.name = name->second;
    const auto grid = kv.find("snr_grid_db");
    if (grid == kv.end()) throw ConfigError("snr_grid_db", "missing key");
    s.snr_grid_db = parse_grid(grid->second);
    if (const auto it = kv.find("n_trials"); it != kv.end()) s.n_trials = parse_count("n_trials", it->second);
    if (const auto it = kv.find("seed"); it != kv.end()) s.seed = parse_count("seed", it->second);
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

Scenario resolve_scenario(std::string_view name_or_path) {
    if (auto s = builtin_scenario(name_or_path)) return *s;
    const std::filesystem::path path{std::string(name_or_path)};
    if (!std::filesystem::exists(path)) {
        throw ConfigError("scenario", "'" + std::string(name_or_path) +
                                          "' is neither a built-in scenario nor an existing file");
    }
    return load_scenario(path);
}

std::vector<SweepRow> run_curve(const Scenario& s, CurveKind kind, unsigned workers) {
    s.validate();
    if (kind == CurveKind::Combined) return sweep_snr(s.cfg, s.snr_grid_db, s.n_trials, s.seed, workers);

    std::vector<SweepRow> rows;
    for (const double snr : s.snr_grid_db) {
        const auto cfg = s.cfg.with_snr_db(snr);
        SweepRow row{snr, nan_estimate(), nan_estimate(),
                     AnalyticBreakdown{kNaN, kNaN, kNaN, classify_case(cfg), kNaN, kNaN, kNaN, kNaN, kNaN}, kNaN};
        if (kind == CurveKind::MonteCarlo) {
            const auto mc = estimate_outage_paired(cfg, s.n_trials, s.seed, workers);
            row.mc = mc.exact;
            row.mc_lower_bound = mc.lower_bound;
        } else {
            row.mc.n_trials = row.mc_lower_bound.n_trials = 0;
            row.analytic = p_out_approx(cfg);
            if (row.analytic.case_label != CaseLabel::CaseC) row.asymptote = p_out_asymptotic(cfg);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_curve_csv(std::ostream& out, std::string_view scenario, const std::vector<SweepRow>& rows) {
    out << kCurveCsvHeader << '\n';
    for (const auto& r : rows) {
        out << scenario << ',' << format_number(r.snr_db) << ',' << r.mc.n_trials << ','
            << format_number(r.mc.p_overall) << ',' << format_number(r.mc.ci_halfwidth_95) << ','
            << format_number(r.mc.p_ue1) << ',' << format_number(r.mc.p_ue2) << ','
            << format_number(r.mc_lower_bound.p_overall) << ',' << format_number(r.analytic.p_out_approx) << ','
            << format_number(r.analytic.p_a) << ',' << format_number(r.analytic.p_b) << ','
            << format_number(r.asymptote) << ',' << to_string(r.analytic.case_label) << '\n';
    }
}

std::string run_scenario(const Scenario& s, unsigned workers) {
    std::ostringstream out;
    write_curve_csv(out, s.name, run_curve(s, CurveKind::Combined, workers));
    return out.str();
}

std::vector<OmaComparisonRow> compare_oma(const Scenario& s, double grid_step, unsigned workers) {
    s.validate();
    std::vector<OmaComparisonRow> rows;
    for (const double snr : s.snr_grid_db) {
        const auto cfg = s.cfg.with_snr_db(snr);
        rows.push_back({snr, estimate_outage(cfg, s.n_trials, s.seed, OutageVariant::Exact, workers),
                        optimize_lambda1(OmaConfig{cfg, 0.5}, grid_step, s.n_trials, s.seed, workers)});
    }
    return rows;
}

void write_oma_csv(std::ostream& out, std::string_view scenario, const std::vector<OmaComparisonRow>& rows) {
    out << kOmaCsvHeader << '\n';
    for (const auto& r : rows) {
        out << scenario << ',' << format_number(r.snr_db) << ',' << r.noma.n_trials << ','
            << format_number(r.noma.p_overall) << ',' << format_number(r.noma.ci_halfwidth_95) << ','
            << format_number(r.oma.estimate.p_overall) << ',' << format_number(r.oma.estimate.ci_halfwidth_95)
            << ',' << format_number(r.oma.best_lambda1) << ',' << r.oma.local_minima << '\n';
    }
}

}  // namespace coopnoma
