#ifndef RELAYSIM_SCENARIO_HPP
#define RELAYSIM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace relaysim {

enum class SamplingMode : std::uint8_t {
    Packet,  ///< one Bernoulli draw per frame against the whole-frame loss rate
    PerBit,  ///< 8 × length independent bit draws; the ground-truth reference
};

/// Invalid configuration; `key` names the offending parameter using its
/// config-file spelling so CLI errors can point at the right line.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

struct ScenarioConfig {
    double ber = 1e-5;
    std::uint32_t packet_len = 1000;      ///< bytes
    std::uint32_t ack_len = 8;            ///< bytes
    double bandwidth_bps = 10e6;
    double prop_delay_s = 1e-6;           ///< per link
    std::uint32_t relays = 2;
    std::uint32_t max_transmissions = 3;  ///< total attempts per hop
    std::uint32_t buffer_slots = 32;      ///< per relay (SRC uses max(1, B))
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::optional<std::uint64_t> stop_packets;  ///< SRC packets to generate
    std::optional<double> stop_seconds;          ///< virtual-time horizon
    SamplingMode sampling_mode = SamplingMode::Packet;
    bool ideal_acks = false;
    double check_delay_s = 0.0;

    // Programmatic knobs, not exposed in config files.
    std::uint32_t dup_window = 1024;
    std::optional<double> rtt_override_s;     ///< default 2 × prop_delay
    std::optional<double> ack_time_override_s;///< default 8 × ack_len / bandwidth

    static constexpr std::uint64_t kDefaultStopPackets = 50000;

    /// Throws ConfigError; fills in the default stop condition when neither
    /// is given. Does not require a seed — callers that run a simulation
    /// enforce that separately so analytic-only paths stay seed-free.
    void validate_and_normalize();

    double serialization_time_s() const { return 8.0 * packet_len / bandwidth_bps; }
    double ack_serialization_time_s() const { return 8.0 * ack_len / bandwidth_bps; }
    double rtt_s() const { return rtt_override_s.value_or(2.0 * prop_delay_s); }
    double ack_time_s() const {
        return ack_time_override_s.value_or(ack_serialization_time_s());
    }
};

} // namespace relaysim

#endif
