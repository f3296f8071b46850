#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coopnoma/analytic.hpp"
#include "coopnoma/config.hpp"
#include "coopnoma/link_sinr.hpp"

namespace coopnoma {

inline constexpr std::uint64_t kDefaultTrials = 100000;

/// Which event set a Monte Carlo run counts.
enum class OutageVariant {
    Exact,       // gamma_12, gamma_1 and gamma_2 against their thresholds
    LowerBound,  // SIC stage dropped, gamma_1 replaced by the interference-free MRC SNR
};

struct OutageEstimate {
    double p_overall = 0.0;
    double p_ue1 = 0.0;
    double p_ue2 = 0.0;
    double ci_halfwidth_95 = 0.0;  // normal approximation on p_overall
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
};

struct OutageCounts {
    std::uint64_t overall = 0;
    std::uint64_t ue1 = 0;
    std::uint64_t ue2 = 0;

    OutageCounts& operator+=(const OutageCounts& o) noexcept {
        overall += o.overall;
        ue1 += o.ue1;
        ue2 += o.ue2;
        return *this;
    }
    void add(const OutageFlags& f) noexcept {
        overall += f.overall_outage;
        ue1 += f.ue1_outage;
        ue2 += f.ue2_outage;
    }
};

/// Trials per work unit. Chunks are reduced in index order, so results do
/// not depend on how many workers ran them.
inline constexpr std::uint64_t kTrialChunk = 1u << 14;

/// Resolves a requested worker count: 0 means hardware concurrency.
unsigned resolve_workers(unsigned requested) noexcept;

/// Runs `chunk_fn(begin, end)` over [0, n_trials) in kTrialChunk pieces on up
/// to `workers` threads and returns the per-chunk results in chunk order.
/// `chunk_fn` must be safe to call concurrently.
template <class Result>
std::vector<Result> run_chunked(std::uint64_t n_trials, unsigned workers,
                                const std::function<Result(std::uint64_t, std::uint64_t)>& chunk_fn);

OutageEstimate make_estimate(const OutageCounts& counts, std::uint64_t n_trials, std::uint64_t seed);

/// Monte Carlo outage estimate. Deterministic in (cfg, n_trials, seed,
/// variant) for any `workers`.
OutageEstimate estimate_outage(const SystemConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                               OutageVariant variant = OutageVariant::Exact, unsigned workers = 0);

/// Exact and lower-bound estimates from one shared set of channel draws.
struct PairedEstimate {
    OutageEstimate exact;
    OutageEstimate lower_bound;
};
PairedEstimate estimate_outage_paired(const SystemConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                                      unsigned workers = 0);

struct SweepRow {
    double snr_db;
    OutageEstimate mc;
    OutageEstimate mc_lower_bound;
    AnalyticBreakdown analytic;
    double asymptote;  // NaN in Case C
};

/// One row per SNR point (P_T / N0 in dB), in grid order. Errors are
/// rethrown as std::runtime_error naming the grid index.
std::vector<SweepRow> sweep_snr(const SystemConfig& base, const std::vector<double>& snr_grid_db,
                                std::uint64_t n_trials, std::uint64_t seed, unsigned workers = 0);

}  // namespace coopnoma

#include "coopnoma/detail/run_chunked.hpp"
