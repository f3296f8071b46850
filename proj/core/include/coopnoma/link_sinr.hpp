#pragma once

#include "coopnoma/channel.hpp"
#include "coopnoma/config.hpp"

namespace coopnoma {

enum class RelayGainMode {
    Exact,          // rho^2 = P_R / (P_T |h_r|^2 + N0)
    HighSnrApprox,  // rho^2 = P_R / (P_T |h_r|^2)
};

/// Squared amplify-and-forward gain of the relay.
double amplify_gain_sq(double gr, const SystemConfig& cfg, RelayGainMode mode);

/// Linear SINRs of the three decoding steps.
struct SinrTriple {
    double gamma_12;  // x2 at UE1 (SIC first stage)
    double gamma_1;   // x1 at UE1 after SIC
    double gamma_2;   // x2 at UE2
};

struct OutageFlags {
    bool ue1_outage = false;
    bool ue2_outage = false;
    bool overall_outage = false;
};

/// Precomputed per-config constants for the per-trial hot path. All member
/// functions are pure; `cfg` must already be validated.
class NomaLink {
public:
    explicit NomaLink(const SystemConfig& cfg);

    SinrTriple sinrs(const ChannelRealization& ch) const noexcept;
    OutageFlags outage(const ChannelRealization& ch) const noexcept;

    /// Outage of the relaxed event set that ignores the SIC stage at UE1 and
    /// replaces gamma_1 by the interference-free MRC SNR
    /// (|h1|^2 + |h~1|^2) P1 / N0. Exact rho^2 is kept.
    OutageFlags outage_lower_bound(const ChannelRealization& ch) const noexcept;

    /// Interference-free UE1 SNR used by `outage_lower_bound`.
    double gamma_1_lower(const ChannelRealization& ch) const noexcept;

    double threshold_ue1() const noexcept { return f1_; }
    double threshold_ue2() const noexcept { return f2_; }

private:
    double rho_sq(double gr) const noexcept { return pr_ / (pt_ * gr + n0_); }

    double pt_, p1_, p2_, pr_, n0_;
    double f1_, f2_;
};

SinrTriple compute_sinrs(const ChannelRealization& ch, const SystemConfig& cfg);
OutageFlags evaluate_outage(const ChannelRealization& ch, const SystemConfig& cfg);

}  // namespace coopnoma
