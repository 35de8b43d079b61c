#include "relaysim/config_file.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace relaysim {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError(key, "not a number: '" + value + "'");
    }
    if (used != value.size()) throw ConfigError(key, "trailing junk in '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    if (!value.empty() && value[0] == '-')
        throw ConfigError(key, "must be nonnegative");
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw ConfigError(key, "not an integer: '" + value + "'");
    }
    if (used != value.size()) throw ConfigError(key, "trailing junk in '" + value + "'");
    return v;
}

std::uint32_t parse_u32(const std::string& key, const std::string& value) {
    const std::uint64_t v = parse_u64(key, value);
    if (v > 0xffffffffULL) throw ConfigError(key, "value too large");
    return static_cast<std::uint32_t>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key, "expected true/false, got '" + value + "'");
}

} // namespace

ScenarioConfig parse_config(std::istream& in) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config",
                              "line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config", "line " + std::to_string(lineno) + ": empty key");
        if (!seen.insert(key).second) throw ConfigError(key, "repeated key");

        if (key == "ber") {
            cfg.ber = parse_double(key, value);
        } else if (key == "packet_len") {
            cfg.packet_len = parse_u32(key, value);
        } else if (key == "ack_len") {
            cfg.ack_len = parse_u32(key, value);
        } else if (key == "bandwidth_bps") {
            cfg.bandwidth_bps = parse_double(key, value);
        } else if (key == "prop_delay_s") {
            cfg.prop_delay_s = parse_double(key, value);
        } else if (key == "relays") {
            cfg.relays = parse_u32(key, value);
        } else if (key == "max_transmissions") {
            cfg.max_transmissions = parse_u32(key, value);
        } else if (key == "buffer_slots") {
            cfg.buffer_slots = parse_u32(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
            cfg.seed_set = true;
        } else if (key == "stop_packets") {
            cfg.stop_packets = parse_u64(key, value);
        } else if (key == "stop_seconds") {
            cfg.stop_seconds = parse_double(key, value);
        } else if (key == "sampling_mode") {
            if (value == "packet")
                cfg.sampling_mode = SamplingMode::Packet;
            else if (value == "perbit")
                cfg.sampling_mode = SamplingMode::PerBit;
            else
                throw ConfigError(key, "expected packet or perbit, got '" + value + "'");
        } else if (key == "ideal_acks") {
            cfg.ideal_acks = parse_bool(key, value);
        } else if (key == "check_delay_s") {
            cfg.check_delay_s = parse_double(key, value);
        } else {
            throw ConfigError(key, "unknown configuration key");
        }
    }
    cfg.validate_and_normalize();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    return parse_config(in);
}

} // namespace relaysim
