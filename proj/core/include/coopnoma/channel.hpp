#pragma once

#include <cstdint>

#include "coopnoma/config.hpp"

namespace coopnoma {

/// Squared channel magnitudes |h|^2 of one fading draw.
struct ChannelRealization {
    double g1;   // BS -> UE1
    double gr;   // BS -> relay
    double gr1;  // relay -> UE1
    double gr2;  // relay -> UE2
};

/// Counter-based stream: the k-th 64-bit word for a given (seed, trial) is a
/// pure function of (seed, trial, k), so trials can be drawn in any order or
/// from any thread and still reproduce.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial_index) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on (0, 1]; never returns 0.
    double uniform_open0() noexcept;
    /// Exponential with the given mean, by inverse CDF.
    double exponential(double mean) noexcept;

private:
    std::uint64_t state_;
};

/// Rayleigh block-fading sampler with fixed link variances.
class ChannelSampler {
public:
    /// Throws std::domain_error if any variance is not positive.
    ChannelSampler(const ChannelVariances& variances, std::uint64_t seed);

    ChannelRealization operator()(std::uint64_t trial_index) const noexcept;

    const ChannelVariances& variances() const noexcept { return variances_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    ChannelVariances variances_;
    std::uint64_t seed_;
};

ChannelRealization sample_realization(const ChannelVariances& variances, std::uint64_t seed,
                                      std::uint64_t trial_index);

}  // namespace coopnoma
