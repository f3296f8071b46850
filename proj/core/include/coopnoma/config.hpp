#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coopnoma {

/// Raised for any invalid system parameter or malformed config input.
/// `key()` names the offending parameter when one can be identified.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Mean power gains (Rayleigh variances) of the four links.
struct ChannelVariances {
    double bs_ue1;     // sigma_1^2
    double bs_relay;   // sigma_r^2
    double relay_ue1;  // sigma_{r,1}^2
    double relay_ue2;  // sigma_{r,2}^2
};

/// Physical parameters of the two-user cooperative downlink.
///
/// Powers are linear and share the unit of `noise_power`. Rates are in
/// bit/s/Hz over the whole two-slot frame. Call `validate()` (or build through
/// `make_config`) before handing a config to any model code.
struct SystemConfig {
    double total_power = 1000.0;  // P_T
    double noise_power = 1.0;     // N0
    double lambda1 = 0.2;         // P1 / P_T
    double lambda_relay = 0.3;    // P_R / P_T
    double rate_ue1 = 1.0;
    double rate_ue2 = 0.7;
    double d_bs_ue1 = 30.0;
    double d_bs_relay = 30.0;
    double d_relay_ue1 = 30.0;
    double d_relay_ue2 = 45.0;
    double d_ref = 20.0;
    double path_loss_exp = 2.0;

    double power_ue1() const noexcept { return lambda1 * total_power; }
    double power_ue2() const noexcept { return (1.0 - lambda1) * total_power; }
    double relay_power() const noexcept { return lambda_relay * total_power; }
    /// Transmit SNR P_T / N0.
    double transmit_snr() const noexcept { return total_power / noise_power; }

    ChannelVariances variances() const;

    /// Copy with P_T set so that P_T / N0 equals `snr_db`.
    SystemConfig with_snr_db(double snr_db) const;

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;
};

enum class CaseLabel { CaseA, CaseB, CaseC };

std::string_view to_string(CaseLabel label) noexcept;

inline constexpr double kCaseEqualityTolerance = 1e-9;

double db_to_linear(double db);
double linear_to_db(double linear);

/// (d / d_ref)^(-alpha).
double variance_from_distance(double d, double d_ref, double alpha);

/// SINR needed to carry `rate` bit/s/Hz over a two-slot frame: 2^(2R) - 1.
double rate_threshold(double rate);

/// Branch of the three-case outage approximation that `cfg` falls in.
/// CaseC when P2/P1 <= f(R2); CaseA when sigma_1^2 and lambda*sigma_{r,1}^2
/// agree within `rel_tol * sigma_1^2`; CaseB otherwise.
CaseLabel classify_case(const SystemConfig& cfg, double rel_tol = kCaseEqualityTolerance);

/// Ordered `key = value` pairs read from a plain-text file. Blank lines and
/// text after '#' are ignored; duplicate keys are an error.
using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_key_values(std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

/// The config keys, in file order.
inline constexpr std::string_view kConfigKeys[] = {
    "total_power_db", "noise_power", "lambda1",     "lambda_relay",
    "rate_ue1",       "rate_ue2",    "d_bs_ue1",    "d_bs_relay",
    "d_relay_ue1",    "d_relay_ue2", "d_ref",       "path_loss_exp",
};

/// Builds a validated config from exactly the keys in `kConfigKeys`.
/// Missing or unknown keys raise ConfigError. `extra_allowed` lists keys that
/// the caller consumes itself and that are skipped here.
SystemConfig config_from_key_values(const KeyValues& kv,
                                    std::initializer_list<std::string_view> extra_allowed = {});

SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);

/// Strict numeric conversion; the whole field must parse.
double parse_double(std::string_view key, std::string_view text);

}  // namespace coopnoma
