#include "coopnoma/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "coopnoma/channel.hpp"

namespace coopnoma {

unsigned resolve_workers(unsigned requested) noexcept {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

OutageEstimate make_estimate(const OutageCounts& counts, std::uint64_t n_trials, std::uint64_t seed) {
    OutageEstimate e;
    const double n = static_cast<double>(n_trials);
    e.p_overall = static_cast<double>(counts.overall) / n;
    e.p_ue1 = static_cast<double>(counts.ue1) / n;
    e.p_ue2 = static_cast<double>(counts.ue2) / n;
    e.ci_halfwidth_95 = 1.96 * std::sqrt(e.p_overall * (1.0 - e.p_overall) / n);
    e.n_trials = n_trials;
    e.seed = seed;
    return e;
}

namespace {

void require_trials(std::uint64_t n_trials) {
    if (n_trials < 1) throw std::invalid_argument("Monte Carlo needs at least one trial");
}

OutageCounts sum(const std::vector<OutageCounts>& parts) {
    OutageCounts total;
    for (const auto& p : parts) total += p;
    return total;
}

}  // namespace

OutageEstimate estimate_outage(const SystemConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                               OutageVariant variant, unsigned workers) {
    require_trials(n_trials);
    cfg.validate();
    const NomaLink link(cfg);
    const ChannelSampler sampler(cfg.variances(), seed);

    const std::function<OutageCounts(std::uint64_t, std::uint64_t)> chunk =
        [&](std::uint64_t begin, std::uint64_t end) {
            OutageCounts c;
            for (std::uint64_t t = begin; t < end; ++t) {
                const auto ch = sampler(t);
                c.add(variant == OutageVariant::Exact ? link.outage(ch) : link.outage_lower_bound(ch));
            }
            return c;
        };
    return make_estimate(sum(run_chunked(n_trials, workers, chunk)), n_trials, seed);
}

PairedEstimate estimate_outage_paired(const SystemConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                                      unsigned workers) {
    require_trials(n_trials);
    cfg.validate();
    const NomaLink link(cfg);
    const ChannelSampler sampler(cfg.variances(), seed);

    struct Pair {
        OutageCounts exact, lower;
    };
    const std::function<Pair(std::uint64_t, std::uint64_t)> chunk = [&](std::uint64_t begin,
                                                                        std::uint64_t end) {
        Pair p;
        for (std::uint64_t t = begin; t < end; ++t) {
            const auto ch = sampler(t);
            p.exact.add(link.outage(ch));
            p.lower.add(link.outage_lower_bound(ch));
        }
        return p;
    };
    OutageCounts exact, lower;
    for (const auto& p : run_chunked(n_trials, workers, chunk)) {
        exact += p.exact;
        lower += p.lower;
    }
    return {make_estimate(exact, n_trials, seed), make_estimate(lower, n_trials, seed)};
}

std::vector<SweepRow> sweep_snr(const SystemConfig& base, const std::vector<double>& snr_grid_db,
                                std::uint64_t n_trials, std::uint64_t seed, unsigned workers) {
    if (snr_grid_db.empty()) throw std::invalid_argument("sweep_snr: SNR grid is empty");
    std::vector<SweepRow> rows;
    rows.reserve(snr_grid_db.size());
    for (std::size_t i = 0; i < snr_grid_db.size(); ++i) {
        try {
            const auto cfg = base.with_snr_db(snr_grid_db[i]);
            const auto mc = estimate_outage_paired(cfg, n_trials, seed, workers);
            const auto analytic = p_out_approx(cfg);
            const double asymptote = analytic.case_label == CaseLabel::CaseC
                                         ? std::numeric_limits<double>::quiet_NaN()
                                         : p_out_asymptotic(cfg);
            rows.push_back({snr_grid_db[i], mc.exact, mc.lower_bound, analytic, asymptote});
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep_snr: grid point " + std::to_string(i) + " (" +
                                     std::to_string(snr_grid_db[i]) + " dB): " + e.what());
        }
    }
    return rows;
}

}  // namespace coopnoma
