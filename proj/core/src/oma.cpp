#include "coopnoma/oma.hpp"

#include <cmath>
#include <stdexcept>

namespace coopnoma {

void OmaConfig::validate() const {
    base.validate();
    if (!(lambda1_oma > 0.0 && lambda1_oma < 1.0)) throw ConfigError("lambda1_oma", "must lie in (0, 1)");
}

double oma_rate_threshold(double rate) {
    if (!(rate >= 0.0)) throw std::domain_error("oma_rate_threshold: rate must be non-negative");
    return std::exp2(3.0 * rate) - 1.0;
}

OmaLink::OmaLink(const SystemConfig& base)
    : pt_(base.total_power),
      pr_(base.relay_power()),
      n0_(base.noise_power),
      f1_(oma_rate_threshold(base.rate_ue1)),
      f2_(oma_rate_threshold(base.rate_ue2)) {}

double OmaLink::snr_ue1(const ChannelRealization& ch, double lambda1_oma) const noexcept {
    return ch.g1 * lambda1_oma * pt_ / n0_;
}

double OmaLink::snr_ue2(const ChannelRealization& ch, double lambda1_oma) const noexcept {
    const double p2 = (1.0 - lambda1_oma) * pt_;
    // Relay normalises to the power it actually received in slot 2.
    const double inv_rho2 = (p2 * ch.gr + n0_) / pr_;
    const double end_to_end = ch.gr2 * ch.gr;
    return end_to_end * p2 / ((ch.gr2 + inv_rho2) * n0_);
}

OutageFlags OmaLink::outage(const ChannelRealization& ch, double lambda1_oma) const noexcept {
    OutageFlags f;
    f.ue1_outage = snr_ue1(ch, lambda1_oma) < f1_;
    f.ue2_outage = snr_ue2(ch, lambda1_oma) < f2_;
    f.overall_outage = f.ue1_outage || f.ue2_outage;
    return f;
}

OutageEstimate oma_outage_mc(const OmaConfig& ocfg, std::uint64_t n_trials, std::uint64_t seed,
                             unsigned workers) {
    ocfg.validate();
    if (n_trials < 1) throw std::invalid_argument("oma_outage_mc: need at least one trial");
    const OmaLink link(ocfg.base);
    const ChannelSampler sampler(ocfg.base.variances(), seed);
    const double l1 = ocfg.lambda1_oma;

    const std::function<OutageCounts(std::uint64_t, std::uint64_t)> chunk =
        [&](std::uint64_t begin, std::uint64_t end) {
            OutageCounts c;
            for (std::uint64_t t = begin; t < end; ++t) c.add(link.outage(sampler(t), l1));
            return c;
        };
    OutageCounts total;
    for (const auto& c : run_chunked(n_trials, workers, chunk)) total += c;
    return make_estimate(total, n_trials, seed);
}

std::vector<double> lambda1_grid(double grid_step) {
    if (!(grid_step > 0.0 && grid_step < 0.5)) {
        throw std::invalid_argument("lambda1_grid: step must lie in (0, 0.5)");
    }
    std::vector<double> grid;
    for (int k = 1;; ++k) {
        const double l = k * grid_step;
        if (l > 1.0 - grid_step + 1e-9) break;
        grid.push_back(l);
    }
    return grid;
}

OmaOptimum optimize_lambda1(const OmaConfig& ocfg_base, double grid_step, std::uint64_t n_trials,
                            std::uint64_t seed, unsigned workers) {
    ocfg_base.base.validate();
    if (n_trials < 1) throw std::invalid_argument("optimize_lambda1: need at least one trial");
    OmaOptimum opt;
    opt.grid = lambda1_grid(grid_step);
    if (opt.grid.empty()) throw std::invalid_argument("optimize_lambda1: empty power-split grid");

    const OmaLink link(ocfg_base.base);
    const ChannelSampler sampler(ocfg_base.base.variances(), seed);
    const std::size_t n_grid = opt.grid.size();

    const std::function<std::vector<OutageCounts>(std::uint64_t, std::uint64_t)> chunk =
        [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<OutageCounts> c(n_grid);
            for (std::uint64_t t = begin; t < end; ++t) {
                const auto ch = sampler(t);
                for (std::size_t g = 0; g < n_grid; ++g) c[g].add(link.outage(ch, opt.grid[g]));
            }
            return c;
        };
    std::vector<OutageCounts> totals(n_grid);
    for (const auto& part : run_chunked(n_trials, workers, chunk)) {
        for (std::size_t g = 0; g < n_grid; ++g) totals[g] += part[g];
    }

    std::size_t best = 0;
    for (std::size_t g = 0; g < n_grid; ++g) {
        opt.scan.push_back(make_estimate(totals[g], n_trials, seed));
        if (totals[g].overall < totals[best].overall) best = g;
    }
    opt.best_lambda1 = opt.grid[best];
    opt.estimate = opt.scan[best];

    // Count significant interior dips: a point is a local minimum when both
    // sides climb by more than 2 CI half-widths before dropping below it.
    // Equal neighbours on the left disqualify, so plateaus count once.
    for (std::size_t g = 1; g + 1 < n_grid; ++g) {
        const double p = opt.scan[g].p_overall;
        const double rise = p + 2.0 * opt.scan[g].ci_halfwidth_95;
        bool left = false;
        for (std::size_t j = g; j-- > 0;) {
            if (opt.scan[j].p_overall <= p) break;
            if (opt.scan[j].p_overall > rise) {
                left = true;
                break;
            }
        }
        bool right = false;
        for (std::size_t j = g + 1; j < n_grid; ++j) {
            if (opt.scan[j].p_overall < p) break;
            if (opt.scan[j].p_overall > rise) {
                right = true;
                break;
            }
        }
        if (left && right) ++opt.local_minima;
    }
    return opt;
}

}  // namespace coopnoma
