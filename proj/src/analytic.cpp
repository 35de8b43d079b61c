#include "relaysim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relaysim::analytic {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

// 1 - (1 - p)^k without cancellation: -expm1(k * log1p(-p)).
double one_minus_pow(double p, double k) {
    if (p >= 1.0) {
        return 1.0;
    }
    return -std::expm1(k * std::log1p(-p));
}

} // namespace

Probability::Probability(double value) : value_(value) {
    require(std::isfinite(value) && value >= 0.0 && value <= 1.0,
            "probability outside [0, 1]");
}

Probability per_hop_loss(double ber, std::uint32_t packet_len_bytes) {
    require(std::isfinite(ber) && ber >= 0.0 && ber < 1.0, "ber outside [0, 1)");
    require(packet_len_bytes >= 1, "packet_len must be >= 1 byte");
    return Probability(one_minus_pow(ber, 8.0 * packet_len_bytes));
}

Probability end_to_end_loss(Probability per_hop, std::uint32_t num_relays) {
    return Probability(one_minus_pow(per_hop.value(), num_relays + 1.0));
}

double ack_timeout(double rtt_s, double t_ack_s) {
    require(std::isfinite(rtt_s) && rtt_s >= 0.0, "rtt must be >= 0");
    require(std::isfinite(t_ack_s) && t_ack_s >= 0.0, "t_ack must be >= 0");
    return 2.0 * rtt_s + 3.0 * t_ack_s;
}

Probability residual_hop_loss_approx(double ber, std::uint32_t packet_len_bytes,
                                     std::uint32_t n) {
    require(std::isfinite(ber) && ber >= 0.0 && ber < 1.0, "ber outside [0, 1)");
    require(packet_len_bytes >= 1, "packet_len must be >= 1 byte");
    require(n >= 1, "attempt count must be >= 1");
    const double linear = 8.0 * ber * packet_len_bytes;
    require(linear < 1.0, "8 * ber * packet_len >= 1: linearized model is invalid here");
    return Probability(std::pow(linear, static_cast<double>(n)));
}

Probability residual_hop_loss_exact(Probability per_hop, std::uint32_t n) {
    require(n >= 1, "attempt count must be >= 1");
    return Probability(std::pow(per_hop.value(), static_cast<double>(n)));
}

Probability end_to_end_delivery_approx(double ber, std::uint32_t packet_len_bytes,
                                       std::uint32_t n, std::uint32_t num_relays) {
    const double residual = residual_hop_loss_approx(ber, packet_len_bytes, n).value();
    const double linear = 8.0 * ber * packet_len_bytes;
    return Probability(std::pow(1.0 - residual, static_cast<double>(num_relays)) *
                       (1.0 - linear));
}

std::vector<LossCurveRow> loss_curve(std::vector<double> ber_grid,
                                     std::uint32_t packet_len_bytes,
                                     const std::vector<std::uint32_t>& relay_counts) {
    std::sort(ber_grid.begin(), ber_grid.end());
    for (std::size_t i = 0; i < ber_grid.size(); ++i) {
        if (!(std::isfinite(ber_grid[i]) && ber_grid[i] >= 0.0 && ber_grid[i] < 1.0)) {
            std::ostringstream msg;
            msg << "ber grid point " << i << " (" << ber_grid[i] << ") outside [0, 1)";
            throw std::invalid_argument(msg.str());
        }
    }

    std::vector<LossCurveRow> rows;
    rows.reserve(ber_grid.size() * relay_counts.size());
    for (std::uint32_t relays : relay_counts) {
        for (double ber : ber_grid) {
            const Probability hop = per_hop_loss(ber, packet_len_bytes);
            rows.push_back({ber, relays, end_to_end_loss(hop, relays).value()});
        }
    }
    return rows;
}

} // namespace relaysim::analytic
