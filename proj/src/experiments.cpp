#include "relaysim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relaysim/analytic.hpp"
#include "relaysim/rng.hpp"

namespace relaysim::experiments {

Metrics run_scenario(const ScenarioConfig& cfg, SimObserver* observer) {
    World world(cfg);
    world.run(observer);
    return world.metrics();
}

std::vector<SweepRow> sweep_retransmissions(const ScenarioConfig& base,
                                            const std::vector<std::uint32_t>& n_values) {
    if (n_values.empty())
        throw ConfigError("max_transmissions", "sweep needs at least one value");
    std::vector<SweepRow> rows;
    rows.reserve(n_values.size());
    for (std::uint32_t n : n_values) {
        ScenarioConfig cfg = base;
        cfg.max_transmissions = n;
        rows.push_back({n, run_scenario(cfg)});
    }
    return rows;
}

std::vector<SweepRow> sweep_buffer(const ScenarioConfig& base,
                                   const std::vector<std::uint32_t>& b_values) {
    if (b_values.empty())
        throw ConfigError("buffer_slots", "sweep needs at least one value");
    std::vector<std::uint32_t> ordered = b_values;
    std::sort(ordered.begin(), ordered.end());
    std::vector<SweepRow> rows;
    rows.reserve(ordered.size());
    for (std::uint32_t b : ordered) {
        ScenarioConfig cfg = base;
        cfg.buffer_slots = b;
        rows.push_back({b, run_scenario(cfg)});
    }
    return rows;
}

namespace {

double z_score(double observed, double model, double trials) {
    const double var = model * (1.0 - model) / trials;
    if (var <= 0.0) return observed == model ? 0.0 : std::numeric_limits<double>::infinity();
    return (observed - model) / std::sqrt(var);
}

} // namespace

std::vector<ValidationRow> validate_against_analytic(
    const std::vector<ValidationPoint>& grid, std::uint64_t master_seed,
    std::uint64_t packets_per_point) {
    std::vector<ValidationRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const ValidationPoint& pt = grid[i];

        ScenarioConfig cfg;
        cfg.ber = pt.ber;
        cfg.packet_len = pt.packet_len;
        cfg.relays = pt.relays;
        cfg.max_transmissions = pt.max_transmissions;
        cfg.buffer_slots = 64;   // rules out overflow losses
        cfg.ideal_acks = true;   // the closed forms assume perfect feedback
        cfg.stop_packets = packets_per_point;
        cfg.seed = substream_seed(master_seed, "validate/" + std::to_string(i));
        cfg.seed_set = true;

        const Metrics m = run_scenario(cfg);
        ValidationRow row;
        row.point = pt;
        row.packets = m.generated - m.in_flight_at_end;
        row.delivered = m.delivered_unique;
        row.sim_delivery = row.packets == 0
                               ? 0.0
                               : static_cast<double>(row.delivered) /
                                     static_cast<double>(row.packets);

        const double w = analytic::per_hop_loss(pt.ber, pt.packet_len).value();
        const double residual =
            analytic::residual_hop_loss_exact(analytic::Probability(w),
                                              pt.max_transmissions)
                .value();
        // Delivery needs every one of the N+1 hops to succeed within its
        // attempt budget.
        row.exact_delivery =
            std::exp((pt.relays + 1.0) * std::log1p(-residual));
        row.approx_delivery = analytic::end_to_end_delivery_approx(
                                   pt.ber, pt.packet_len, pt.max_transmissions,
                                   pt.relays)
                                  .value();
        const double trials = static_cast<double>(row.packets);
        row.exact_z = z_score(row.sim_delivery, row.exact_delivery, trials);
        row.approx_z = z_score(row.sim_delivery, row.approx_delivery, trials);
        row.approx_flagged = std::abs(row.approx_z) > 3.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace relaysim::experiments
