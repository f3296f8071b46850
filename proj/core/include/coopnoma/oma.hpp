#pragma once

#include <cstdint>
#include <vector>

#include "coopnoma/channel.hpp"
#include "coopnoma/config.hpp"
#include "coopnoma/montecarlo.hpp"

namespace coopnoma {

/// Three-slot cooperative OMA baseline.
///
/// Slot 1: BS -> UE1 carries x1 with power lambda1_oma P_T.
/// Slot 2: BS -> relay carries x2 with power (1 - lambda1_oma) P_T.
/// Slot 3: relay -> UE2, amplify-and-forward with power lambda P_T.
/// UE1 does not listen in slots 2-3. All other parameters come from `base`.
struct OmaConfig {
    SystemConfig base;
    double lambda1_oma = 0.5;

    void validate() const;
};

/// SINR needed for `rate` over a three-slot frame: 2^(3R) - 1.
double oma_rate_threshold(double rate);

/// Per-trial OMA link model; `lambda1_oma` is supplied per call so one
/// channel draw can be scored against a whole power-split grid.
class OmaLink {
public:
    explicit OmaLink(const SystemConfig& base);

    OutageFlags outage(const ChannelRealization& ch, double lambda1_oma) const noexcept;

    double snr_ue1(const ChannelRealization& ch, double lambda1_oma) const noexcept;
    /// End-to-end AF SNR at UE2 with no inter-user interference.
    double snr_ue2(const ChannelRealization& ch, double lambda1_oma) const noexcept;

private:
    double pt_, pr_, n0_;
    double f1_, f2_;
};

OutageEstimate oma_outage_mc(const OmaConfig& ocfg, std::uint64_t n_trials, std::uint64_t seed,
                             unsigned workers = 0);

struct OmaOptimum {
    double best_lambda1 = 0.0;
    OutageEstimate estimate;
    std::vector<double> grid;
    std::vector<OutageEstimate> scan;  // aligned with `grid`
    /// Interior local minima of the scan after discarding dips smaller than
    /// twice the CI half-width. More than one is suspicious, not an error.
    std::size_t local_minima = 0;
};

/// The power-split grid {step, 2 step, ..., <= 1 - step}.
std::vector<double> lambda1_grid(double grid_step);

/// Brute-force search for the OMA power split minimising overall outage.
/// All grid points share the same channel draws (common random numbers);
/// ties go to the smaller lambda1.
OmaOptimum optimize_lambda1(const OmaConfig& ocfg_base, double grid_step, std::uint64_t n_trials,
                            std::uint64_t seed, unsigned workers = 0);

}  // namespace coopnoma
