// coopnoma: outage curves for two-user cooperative NOMA over an AF relay.
//
//   coopnoma sweep --scenario case-b1 --trials 100000 --seed 7 --out b1.csv
//   coopnoma compare-oma --scenario case-b1
//   coopnoma validate

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coopnoma/scenario.hpp"
#include "coopnoma/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadConfig = 2;

struct CommonOptions {
    std::string scenario = "case-b1";
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::optional<double> snr_from, snr_to;
    std::optional<double> snr_step;
    unsigned workers = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--scenario", o.scenario, "Built-in name (case-a, case-b1, case-b2, case-c) or scenario file")
        ->capture_default_str();
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per SNR point");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output CSV path (default: stdout)");
    cmd->add_option("--snr-from", o.snr_from, "First SNR point, P_T/N0 in dB");
    cmd->add_option("--snr-to", o.snr_to, "Last SNR point, P_T/N0 in dB");
    cmd->add_option("--snr-step", o.snr_step, "SNR step in dB (default 5)");
    cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores); results do not depend on it")
        ->capture_default_str();
}

coopnoma::Scenario build_scenario(const CommonOptions& o) {
    auto s = coopnoma::resolve_scenario(o.scenario);
    if (o.trials) s.n_trials = *o.trials;
    if (o.seed) s.seed = *o.seed;
    if (o.snr_from || o.snr_to || o.snr_step) {
        const double from = o.snr_from.value_or(s.snr_grid_db.front());
        const double to = o.snr_to.value_or(s.snr_grid_db.back());
        s.snr_grid_db = coopnoma::snr_grid(from, to, o.snr_step.value_or(5.0));
    }
    s.validate();
    return s;
}

template <class Writer>
void emit(const std::string& path, Writer&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw coopnoma::ConfigError("out", "cannot open " + path + " for writing");
    write(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage analysis of downlink cooperative NOMA with an amplify-and-forward relay"};
    app.require_subcommand(1);

    CommonOptions opts;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage curve");
    auto* analytic = app.add_subcommand("analytic", "Closed-form approximation and high-SNR asymptote");
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo and closed-form curves side by side");
    auto* oma = app.add_subcommand("compare-oma", "NOMA against cooperative OMA with optimised power split");
    for (auto* cmd : {simulate, analytic, sweep, oma}) add_common(cmd, opts);

    double grid_step = 0.01;
    oma->add_option("--grid-step", grid_step, "OMA power-split search step")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Run the closed-form property suite");
    coopnoma::ValidationOptions vopts;
    validate->add_option("--seed", vopts.seed, "Seed for random configurations")->capture_default_str();
    validate->add_option("--perturb-k1", vopts.k1_perturbation, "Relative error injected into K1 (self-test)")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            const auto results = coopnoma::run_validation(vopts);
            coopnoma::print_report(std::cout, results);
            const bool ok = std::ranges::all_of(results, [](const auto& r) { return r.passed; });
            std::cout << (ok ? "all properties passed\n" : "validation FAILED\n");
            return ok ? kExitOk : kExitValidationFailed;
        }

        const auto s = build_scenario(opts);
        if (oma->parsed()) {
            const auto rows = coopnoma::compare_oma(s, grid_step, opts.workers);
            emit(opts.out, [&](std::ostream& os) { coopnoma::write_oma_csv(os, s.name, rows); });
            return kExitOk;
        }
        const auto kind = simulate->parsed()   ? coopnoma::CurveKind::MonteCarlo
                          : analytic->parsed() ? coopnoma::CurveKind::Analytic
                                               : coopnoma::CurveKind::Combined;
        const auto rows = coopnoma::run_curve(s, kind, opts.workers);
        emit(opts.out, [&](std::ostream& os) { coopnoma::write_curve_csv(os, s.name, rows); });
        return kExitOk;
    } catch (const coopnoma::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidationFailed;
    }
}
