#include "coopnoma/link_sinr.hpp"

#include <stdexcept>

namespace coopnoma {

double amplify_gain_sq(double gr, const SystemConfig& cfg, RelayGainMode mode) {
    if (!(gr >= 0.0)) throw std::domain_error("amplify_gain_sq: channel gain must be non-negative");
    switch (mode) {
        case RelayGainMode::Exact:
            return cfg.relay_power() / (cfg.total_power * gr + cfg.noise_power);
        case RelayGainMode::HighSnrApprox:
            if (gr == 0.0) throw std::domain_error("amplify_gain_sq: high-SNR form is undefined at zero gain");
            return cfg.lambda_relay / gr;
    }
    throw std::invalid_argument("amplify_gain_sq: unknown mode");
}

NomaLink::NomaLink(const SystemConfig& cfg)
    : pt_(cfg.total_power),
      p1_(cfg.power_ue1()),
      p2_(cfg.power_ue2()),
      pr_(cfg.relay_power()),
      n0_(cfg.noise_power),
      f1_(rate_threshold(cfg.rate_ue1)),
      f2_(rate_threshold(cfg.rate_ue2)) {}

SinrTriple NomaLink::sinrs(const ChannelRealization& ch) const noexcept {
    const double rho2 = rho_sq(ch.gr);
    const double relayed = rho2 * ch.gr1 * ch.gr;  // |h~1|^2
    const double combined = ch.g1 + relayed;
    const double combined_sq = combined * combined;
    // MRC output noise: |h~1|^2 (rho^2 |h_r1|^2 + 1) + |h1|^2, in units of N0.
    const double noise = (relayed * (rho2 * ch.gr1 + 1.0) + ch.g1) * n0_;

    SinrTriple out{0.0, 0.0, 0.0};
    if (combined > 0.0) {
        out.gamma_12 = combined_sq * p2_ / (combined_sq * p1_ + noise);
        out.gamma_1 = noise > 0.0 ? combined_sq * p1_ / noise : 0.0;
    }
    const double end_to_end = ch.gr2 * ch.gr;
    out.gamma_2 = end_to_end * p2_ / (end_to_end * p1_ + (ch.gr2 + 1.0 / rho2) * n0_);
    return out;
}

OutageFlags NomaLink::outage(const ChannelRealization& ch) const noexcept {
    const auto s = sinrs(ch);
    OutageFlags f;
    f.ue1_outage = s.gamma_12 < f2_ || s.gamma_1 < f1_;
    f.ue2_outage = s.gamma_2 < f2_;
    f.overall_outage = f.ue1_outage || f.ue2_outage;
    return f;
}

double NomaLink::gamma_1_lower(const ChannelRealization& ch) const noexcept {
    return (ch.g1 + rho_sq(ch.gr) * ch.gr1 * ch.gr) * p1_ / n0_;
}

OutageFlags NomaLink::outage_lower_bound(const ChannelRealization& ch) const noexcept {
    const auto s = sinrs(ch);
    OutageFlags f;
    f.ue1_outage = gamma_1_lower(ch) < f1_;
    f.ue2_outage = s.gamma_2 < f2_;
    f.overall_outage = f.ue1_outage || f.ue2_outage;
    return f;
}

SinrTriple compute_sinrs(const ChannelRealization& ch, const SystemConfig& cfg) {
    cfg.validate();
    return NomaLink(cfg).sinrs(ch);
}

OutageFlags evaluate_outage(const ChannelRealization& ch, const SystemConfig& cfg) {
    cfg.validate();
    return NomaLink(cfg).outage(ch);
}

}  // namespace coopnoma
