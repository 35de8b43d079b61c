#include "relaysim/csv.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace relaysim::csv {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_config_metadata(std::ostream& os, const ScenarioConfig& cfg) {
    os << "# ber = " << format_double(cfg.ber) << '\n';
    os << "# packet_len = " << cfg.packet_len << '\n';
    os << "# ack_len = " << cfg.ack_len << '\n';
    os << "# bandwidth_bps = " << format_double(cfg.bandwidth_bps) << '\n';
    os << "# prop_delay_s = " << format_double(cfg.prop_delay_s) << '\n';
    os << "# relays = " << cfg.relays << '\n';
    os << "# max_transmissions = " << cfg.max_transmissions << '\n';
    os << "# buffer_slots = " << cfg.buffer_slots << '\n';
    os << "# seed = " << cfg.seed << '\n';
    if (cfg.stop_packets) os << "# stop_packets = " << *cfg.stop_packets << '\n';
    if (cfg.stop_seconds) os << "# stop_seconds = " << format_double(*cfg.stop_seconds) << '\n';
    os << "# sampling_mode = "
       << (cfg.sampling_mode == SamplingMode::Packet ? "packet" : "perbit") << '\n';
    os << "# ideal_acks = " << (cfg.ideal_acks ? "true" : "false") << '\n';
    os << "# check_delay_s = " << format_double(cfg.check_delay_s) << '\n';
}

void write_analytic_table(std::ostream& os,
                          const std::vector<analytic::LossCurveRow>& rows,
                          std::uint32_t packet_len, double ber_min,
                          double ber_max, std::uint32_t points) {
    os << "# packet_len = " << packet_len << '\n';
    os << "# ber_min = " << format_double(ber_min) << '\n';
    os << "# ber_max = " << format_double(ber_max) << '\n';
    os << "# points = " << points << '\n';
    os << "ber,relays,end_to_end_loss\n";
    for (const auto& r : rows)
        os << format_double(r.ber) << ',' << r.num_relays << ','
           << format_double(r.loss) << '\n';
}

void write_run(std::ostream& os, const ScenarioConfig& cfg, const Metrics& m) {
    write_config_metadata(os, cfg);
    os << "utilization,end_to_end_loss,generated,delivered_unique,"
          "duplicates_suppressed,dropped_retx_limit,dropped_buffer_overflow,"
          "total_transmissions,stale_acks,in_flight_at_end,mean_latency_s,"
          "max_latency_s,starved\n";
    os << format_double(m.utilization) << ',' << format_double(m.end_to_end_loss)
       << ',' << m.generated << ',' << m.delivered_unique << ','
       << m.duplicates_suppressed << ',' << m.dropped_retx_limit << ','
       << m.dropped_buffer_overflow << ',' << m.total_transmissions << ','
       << m.stale_acks << ',' << m.in_flight_at_end << ','
       << format_double(m.mean_latency_s) << ',' << format_double(m.max_latency_s)
       << ',' << (m.starved ? "true" : "false") << '\n';
}

void write_sweep(std::ostream& os, const ScenarioConfig& base,
                 const std::string& swept_key,
                 const std::vector<experiments::SweepRow>& rows) {
    write_config_metadata(os, base);
    os << swept_key
       << ",utilization,end_to_end_loss,delivered_unique,dropped_retx_limit,"
          "dropped_buffer_overflow,total_transmissions\n";
    for (const auto& r : rows) {
        const Metrics& m = r.metrics;
        os << r.value << ',' << format_double(m.utilization) << ','
           << format_double(m.end_to_end_loss) << ',' << m.delivered_unique << ','
           << m.dropped_retx_limit << ',' << m.dropped_buffer_overflow << ','
           << m.total_transmissions << '\n';
    }
}

void write_validation(std::ostream& os,
                      const std::vector<experiments::ValidationRow>& rows,
                      std::uint64_t master_seed, std::uint64_t packets_per_point) {
    os << "# seed = " << master_seed << '\n';
    os << "# packets_per_point = " << packets_per_point << '\n';
    os << "# buffer_slots = 64\n";
    os << "# ideal_acks = true\n";
    os << "ber,packet_len,relays,max_transmissions,sim_delivery,exact_delivery,"
          "exact_z,approx_delivery,approx_z,approx_flagged\n";
    for (const auto& r : rows) {
        os << format_double(r.point.ber) << ',' << r.point.packet_len << ','
           << r.point.relays << ',' << r.point.max_transmissions << ','
           << format_double(r.sim_delivery) << ',' << format_double(r.exact_delivery)
           << ',' << format_double(r.exact_z) << ',' << format_double(r.approx_delivery)
           << ',' << format_double(r.approx_z) << ','
           << (r.approx_flagged ? "true" : "false") << '\n';
    }
}

} // namespace relaysim::csv
