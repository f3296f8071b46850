#include "coopnoma/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace coopnoma {

namespace {

void require_positive(std::string_view key, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(std::string(key), "must be a positive finite number");
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::CaseA: return "A";
        case CaseLabel::CaseB: return "B";
        case CaseLabel::CaseC: return "C";
    }
    return "?";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    if (!(linear > 0.0)) throw std::domain_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(linear);
}

double variance_from_distance(double d, double d_ref, double alpha) {
    if (!(d > 0.0)) throw std::domain_error("variance_from_distance: distance must be positive");
    if (!(d_ref > 0.0)) throw std::domain_error("variance_from_distance: reference distance must be positive");
    if (!(alpha >= 0.0)) throw std::domain_error("variance_from_distance: path-loss exponent must be >= 0");
    return std::pow(d / d_ref, -alpha);
}

double rate_threshold(double rate) {
    if (!(rate >= 0.0)) throw std::domain_error("rate_threshold: rate must be non-negative");
    return std::exp2(2.0 * rate) - 1.0;
}

ChannelVariances SystemConfig::variances() const {
    return {
        variance_from_distance(d_bs_ue1, d_ref, path_loss_exp),
        variance_from_distance(d_bs_relay, d_ref, path_loss_exp),
        variance_from_distance(d_relay_ue1, d_ref, path_loss_exp),
        variance_from_distance(d_relay_ue2, d_ref, path_loss_exp),
    };
}

SystemConfig SystemConfig::with_snr_db(double snr_db) const {
    SystemConfig out = *this;
    out.total_power = noise_power * db_to_linear(snr_db);
    return out;
}

void SystemConfig::validate() const {
    require_positive("total_power", total_power);
    require_positive("noise_power", noise_power);
    if (!(lambda1 > 0.0 && lambda1 < 1.0)) throw ConfigError("lambda1", "must lie in (0, 1)");
    require_positive("lambda_relay", lambda_relay);
    require_positive("rate_ue1", rate_ue1);
    require_positive("rate_ue2", rate_ue2);
    require_positive("d_bs_ue1", d_bs_ue1);
    require_positive("d_bs_relay", d_bs_relay);
    require_positive("d_relay_ue1", d_relay_ue1);
    require_positive("d_relay_ue2", d_relay_ue2);
    require_positive("d_ref", d_ref);
    if (!(path_loss_exp >= 0.0) || !std::isfinite(path_loss_exp)) {
        throw ConfigError("path_loss_exp", "must be a non-negative finite number");
    }
    // SIC at UE1 decodes x2 first, which needs the UE2 signal to be the stronger one.
    if (!(power_ue1() < power_ue2())) {
        throw ConfigError("lambda1", "NOMA ordering requires P1 < P2 (lambda1 < 0.5)");
    }
}

CaseLabel classify_case(const SystemConfig& cfg, double rel_tol) {
    cfg.validate();
    const double f2 = rate_threshold(cfg.rate_ue2);
    if (cfg.power_ue2() / cfg.power_ue1() <= f2) return CaseLabel::CaseC;
    const auto v = cfg.variances();
    const double relayed = cfg.lambda_relay * v.relay_ue1;
    if (std::abs(v.bs_ue1 - relayed) <= rel_tol * v.bs_ue1) return CaseLabel::CaseA;
    return CaseLabel::CaseB;
}

KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
        if (!kv.emplace(std::string(key), std::string(value)).second) {
            throw ConfigError(std::string(key), "duplicate key");
        }
    }
    return kv;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError(std::string(key), "not a number: '" + std::string(text) + "'");
    }
    return value;
}

SystemConfig config_from_key_values(const KeyValues& kv,
                                    std::initializer_list<std::string_view> extra_allowed) {
    for (const auto& [key, value] : kv) {
        const bool known = std::ranges::find(kConfigKeys, key) != std::end(kConfigKeys) ||
                           std::ranges::find(extra_allowed, key) != extra_allowed.end();
        if (!known) throw ConfigError(key, "unknown key");
    }
    auto get = [&](std::string_view key) {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError(std::string(key), "missing key");
        return parse_double(key, it->second);
    };

    SystemConfig cfg;
    cfg.noise_power = get("noise_power");
    cfg.total_power = db_to_linear(get("total_power_db"));
    cfg.lambda1 = get("lambda1");
    cfg.lambda_relay = get("lambda_relay");
    cfg.rate_ue1 = get("rate_ue1");
    cfg.rate_ue2 = get("rate_ue2");
    cfg.d_bs_ue1 = get("d_bs_ue1");
    cfg.d_bs_relay = get("d_bs_relay");
    cfg.d_relay_ue1 = get("d_relay_ue1");
    cfg.d_relay_ue2 = get("d_relay_ue2");
    cfg.d_ref = get("d_ref");
    cfg.path_loss_exp = get("path_loss_exp");
    cfg.validate();
    return cfg;
}

SystemConfig parse_config(std::string_view text) { return config_from_key_values(parse_key_values(text)); }

SystemConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

}  // namespace coopnoma
