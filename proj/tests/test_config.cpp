#include <sstream>
#include <string>

#include "doctest.h"
#include "relaysim/config_file.hpp"

using namespace relaysim;

namespace {

ScenarioConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string error_key(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "";
}

} // namespace

TEST_CASE("an empty config yields the documented defaults") {
    const ScenarioConfig cfg = parse("");
    CHECK(cfg.ber == 1e-5);
    CHECK(cfg.packet_len == 1000);
    CHECK(cfg.ack_len == 8);
    CHECK(cfg.bandwidth_bps == 10e6);
    CHECK(cfg.prop_delay_s == 1e-6);
    CHECK(cfg.relays == 2);
    CHECK(cfg.max_transmissions == 3);
    CHECK(cfg.buffer_slots == 32);
    CHECK_FALSE(cfg.seed_set);
    REQUIRE(cfg.stop_packets.has_value());  // default stop condition filled in
    CHECK(*cfg.stop_packets == 50000);
    CHECK_FALSE(cfg.stop_seconds.has_value());
    CHECK(cfg.sampling_mode == SamplingMode::Packet);
    CHECK_FALSE(cfg.ideal_acks);
    CHECK(cfg.check_delay_s == 0.0);
}

TEST_CASE("every key round-trips, with comments and stray whitespace") {
    const ScenarioConfig cfg = parse(
        "# full scenario\n"
        "ber = 2e-6\n"
        "packet_len=512\n"
        "  ack_len =  16  # inline comment\n"
        "bandwidth_bps = 1e6\n"
        "prop_delay_s = 5e-6\n"
        "\n"
        "relays = 7\n"
        "max_transmissions = 4\n"
        "buffer_slots = 3\n"
        "seed = 99\n"
        "stop_seconds = 2.5\n"
        "sampling_mode = perbit\n"
        "ideal_acks = true\n"
        "check_delay_s = 1e-7\n");
    CHECK(cfg.ber == 2e-6);
    CHECK(cfg.packet_len == 512);
    CHECK(cfg.ack_len == 16);
    CHECK(cfg.bandwidth_bps == 1e6);
    CHECK(cfg.prop_delay_s == 5e-6);
    CHECK(cfg.relays == 7);
    CHECK(cfg.max_transmissions == 4);
    CHECK(cfg.buffer_slots == 3);
    CHECK(cfg.seed_set);
    CHECK(cfg.seed == 99);
    CHECK_FALSE(cfg.stop_packets.has_value());
    CHECK(*cfg.stop_seconds == 2.5);
    CHECK(cfg.sampling_mode == SamplingMode::PerBit);
    CHECK(cfg.ideal_acks);
    CHECK(cfg.check_delay_s == 1e-7);
}

TEST_CASE("parse errors name the offending key") {
    CHECK(error_key("bandwidth = 1\n") == "bandwidth");  // unknown key
    CHECK(error_key("ber = 1e-5\nber = 2e-5\n") == "ber");
    CHECK(error_key("ber = abc\n") == "ber");
    CHECK(error_key("relays = 2x\n") == "relays");
    CHECK(error_key("relays = -3\n") == "relays");
    CHECK(error_key("seed = 1.5\n") == "seed");
    CHECK(error_key("ideal_acks = yes\n") == "ideal_acks");
    CHECK(error_key("sampling_mode = bits\n") == "sampling_mode");
    CHECK(error_key("just a line\n") == "config");
    CHECK(error_key("= 5\n") == "config");
}

TEST_CASE("validation errors name the offending key") {
    CHECK(error_key("ber = 1.0\n") == "ber");
    CHECK(error_key("ber = -0.1\n") == "ber");
    CHECK(error_key("packet_len = 0\n") == "packet_len");
    CHECK(error_key("packet_len = 2000000\n") == "packet_len");
    CHECK(error_key("ack_len = 0\n") == "ack_len");
    CHECK(error_key("bandwidth_bps = 0\n") == "bandwidth_bps");
    CHECK(error_key("bandwidth_bps = -5\n") == "bandwidth_bps");
    CHECK(error_key("bandwidth_bps = 2e12\n") == "bandwidth_bps");
    CHECK(error_key("bandwidth_bps = 0.5\n") == "bandwidth_bps");  // serialization too long
    CHECK(error_key("prop_delay_s = -1e-6\n") == "prop_delay_s");
    CHECK(error_key("prop_delay_s = 1e5\n") == "prop_delay_s");
    CHECK(error_key("max_transmissions = 0\n") == "max_transmissions");
    CHECK(error_key("max_transmissions = 70000\n") == "max_transmissions");
    CHECK(error_key("check_delay_s = -1\n") == "check_delay_s");
    CHECK(error_key("stop_packets = 0\n") == "stop_packets");
    CHECK(error_key("stop_packets = 200000000\n") == "stop_packets");
    CHECK(error_key("stop_seconds = 0\n") == "stop_seconds");
    CHECK(error_key("stop_seconds = 1e7\n") == "stop_seconds");
    CHECK(error_key("stop_packets = 10\nstop_seconds = 1\n") == "stop_packets");
}

TEST_CASE("a missing config file is a config error, not a crash") {
    CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), ConfigError);
    try {
        load_config_file("/nonexistent/path.cfg");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "config");
    }
}
