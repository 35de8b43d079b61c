#ifndef RELAYSIM_EXPERIMENTS_HPP
#define RELAYSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <vector>

#include "relaysim/metrics.hpp"
#include "relaysim/scenario.hpp"
#include "relaysim/world.hpp"

namespace relaysim::experiments {

/// One complete simulation; throws ConfigError on a bad config.
Metrics run_scenario(const ScenarioConfig& cfg, SimObserver* observer = nullptr);

struct SweepRow {
    std::uint32_t value = 0;  ///< the swept parameter at this point
    Metrics metrics;
};

/// Each point reuses the base seed unchanged (common random numbers), so
/// differences between points reflect the swept parameter rather than
/// resampled channels. Rows come back in the order the values were given.
std::vector<SweepRow> sweep_retransmissions(const ScenarioConfig& base,
                                            const std::vector<std::uint32_t>& n_values);

/// Same seeding policy; rows in ascending buffer order.
std::vector<SweepRow> sweep_buffer(const ScenarioConfig& base,
                                   const std::vector<std::uint32_t>& b_values);

struct ValidationPoint {
    double ber = 0.0;
    std::uint32_t packet_len = 0;
    std::uint32_t relays = 0;
    std::uint32_t max_transmissions = 1;
};

struct ValidationRow {
    ValidationPoint point;
    std::uint64_t packets = 0;    ///< decided packets (the binomial n)
    std::uint64_t delivered = 0;
    double sim_delivery = 0.0;
    double exact_delivery = 0.0;  ///< (1 − W^n)^(N+1)
    double exact_z = 0.0;
    double approx_delivery = 0.0; ///< linearized closed form
    double approx_z = 0.0;
    bool approx_flagged = false;  ///< |approx_z| > 3: the shortcut deviates here
};

/// Monte-Carlo delivery vs the two closed forms, under the closed forms' own
/// assumptions: overflow ruled out (64 slots) and ideal acknowledgments.
/// Point seeds derive from the master seed by point index.
std::vector<ValidationRow> validate_against_analytic(
    const std::vector<ValidationPoint>& grid, std::uint64_t master_seed,
    std::uint64_t packets_per_point);

} // namespace relaysim::experiments

#endif
