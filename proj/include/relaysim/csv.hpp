#ifndef RELAYSIM_CSV_HPP
#define RELAYSIM_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "relaysim/analytic.hpp"
#include "relaysim/experiments.hpp"
#include "relaysim/metrics.hpp"
#include "relaysim/scenario.hpp"

namespace relaysim::csv {

/// Shortest decimal string that parses back to exactly the same double, so
/// emitted tables lose no precision and re-runs are byte-comparable.
std::string format_double(double v);

/// `# key = value` header lines carrying the full scenario, in the config
/// file's key order. Every emitted table starts with these so any deviation
/// from defaults is visible in the artifact itself.
void write_config_metadata(std::ostream& os, const ScenarioConfig& cfg);

void write_analytic_table(std::ostream& os,
                          const std::vector<analytic::LossCurveRow>& rows,
                          std::uint32_t packet_len, double ber_min,
                          double ber_max, std::uint32_t points);

void write_run(std::ostream& os, const ScenarioConfig& cfg, const Metrics& m);

/// `swept_key` is the config-file name of the swept parameter; it becomes
/// the first column. The metadata block shows the base config.
void write_sweep(std::ostream& os, const ScenarioConfig& base,
                 const std::string& swept_key,
                 const std::vector<experiments::SweepRow>& rows);

void write_validation(std::ostream& os,
                      const std::vector<experiments::ValidationRow>& rows,
                      std::uint64_t master_seed, std::uint64_t packets_per_point);

} // namespace relaysim::csv

#endif
