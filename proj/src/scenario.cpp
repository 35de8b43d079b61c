#include "relaysim/scenario.hpp"

namespace relaysim {

void ScenarioConfig::validate_and_normalize() {
    if (!(ber >= 0.0 && ber < 1.0)) throw ConfigError("ber", "must be in [0, 1)");
    if (packet_len < 1) throw ConfigError("packet_len", "must be at least 1 byte");
    if (ack_len < 1) throw ConfigError("ack_len", "must be at least 1 byte");
    if (packet_len > 1000000) throw ConfigError("packet_len", "must be at most 1e6 bytes");
    if (ack_len > 1000000) throw ConfigError("ack_len", "must be at most 1e6 bytes");
    if (!(bandwidth_bps > 0.0)) throw ConfigError("bandwidth_bps", "must be positive");
    if (!(bandwidth_bps <= 1e12))
        throw ConfigError("bandwidth_bps", "must be at most 1e12 bits/s");
    // The clock is integer picoseconds; keeping every interval well below
    // its range makes overflow impossible by construction.
    if (!(prop_delay_s >= 0.0)) throw ConfigError("prop_delay_s", "must be nonnegative");
    if (!(prop_delay_s <= 1e4))
        throw ConfigError("prop_delay_s", "must be at most 1e4 seconds");
    if (!(serialization_time_s() <= 1e4))
        throw ConfigError("bandwidth_bps", "frame serialization exceeds 1e4 seconds");
    if (max_transmissions < 1)
        throw ConfigError("max_transmissions", "must allow at least one attempt");
    if (max_transmissions > 65535)
        throw ConfigError("max_transmissions", "must fit in 16 bits");
    if (!(check_delay_s >= 0.0)) throw ConfigError("check_delay_s", "must be nonnegative");
    if (!(check_delay_s <= 1e4))
        throw ConfigError("check_delay_s", "must be at most 1e4 seconds");
    if (stop_packets && stop_seconds)
        throw ConfigError("stop_packets", "mutually exclusive with stop_seconds");
    if (stop_packets && *stop_packets == 0)
        throw ConfigError("stop_packets", "must be positive");
    if (stop_packets && *stop_packets > 100000000)
        throw ConfigError("stop_packets", "must be at most 1e8");
    if (stop_seconds && !(*stop_seconds > 0.0))
        throw ConfigError("stop_seconds", "must be positive");
    if (stop_seconds && !(*stop_seconds <= 1e6))
        throw ConfigError("stop_seconds", "must be at most 1e6 seconds");
    if (!stop_packets && !stop_seconds) stop_packets = kDefaultStopPackets;
    if (rtt_override_s && !(*rtt_override_s >= 0.0 && *rtt_override_s <= 1e4))
        throw ConfigError("rtt_override", "must be in [0, 1e4] seconds");
    if (ack_time_override_s && !(*ack_time_override_s >= 0.0 && *ack_time_override_s <= 1e4))
        throw ConfigError("ack_time_override", "must be in [0, 1e4] seconds");
    if (dup_window < 1) throw ConfigError("dup_window", "must be positive");
}

} // namespace relaysim
