#include "coopnoma/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace coopnoma {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
// Words drawn per trial; trials occupy disjoint windows of the key's sequence.
constexpr std::uint64_t kWordsPerTrial = 4;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial_index) noexcept
    : state_(mix64(seed ^ 0x6a09e667f3bcc909ULL) + trial_index * kWordsPerTrial * kGolden) {}

std::uint64_t TrialStream::next() noexcept {
    state_ += kGolden;
    return mix64(state_);
}

double TrialStream::uniform_open0() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double TrialStream::exponential(double mean) noexcept { return -mean * std::log(uniform_open0()); }

ChannelSampler::ChannelSampler(const ChannelVariances& variances, std::uint64_t seed)
    : variances_(variances), seed_(seed) {
    for (double v : {variances.bs_ue1, variances.bs_relay, variances.relay_ue1, variances.relay_ue2}) {
        if (!(v > 0.0)) throw std::domain_error("ChannelSampler: variances must be positive");
    }
}

ChannelRealization ChannelSampler::operator()(std::uint64_t trial_index) const noexcept {
    TrialStream s(seed_, trial_index);
    ChannelRealization ch;
    ch.g1 = s.exponential(variances_.bs_ue1);
    ch.gr = s.exponential(variances_.bs_relay);
    ch.gr1 = s.exponential(variances_.relay_ue1);
    ch.gr2 = s.exponential(variances_.relay_ue2);
    return ch;
}

ChannelRealization sample_realization(const ChannelVariances& variances, std::uint64_t seed,
                                      std::uint64_t trial_index) {
    return ChannelSampler(variances, seed)(trial_index);
}

}  // namespace coopnoma
