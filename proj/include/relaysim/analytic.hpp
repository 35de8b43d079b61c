#ifndef RELAYSIM_ANALYTIC_HPP
#define RELAYSIM_ANALYTIC_HPP

#include <cstdint>
#include <vector>

// Closed-form loss and timing models for a linear chain of stations with
// independent bit errors on every link. All probabilities are evaluated in
// log domain so that tiny bit error ratios (1e-12 and below) do not round
// to "no loss".

namespace relaysim::analytic {

/// A checked probability value in [0, 1].
class Probability {
  public:
    Probability() = default;
    explicit Probability(double value);

    double value() const { return value_; }

  private:
    double value_ = 0.0;
};

/// Probability that a data frame of `packet_len_bytes` is corrupted on one
/// link with bit error ratio `ber`: 1 - (1 - ber)^(8 L).
Probability per_hop_loss(double ber, std::uint32_t packet_len_bytes);

/// Probability that a frame is lost anywhere on a path with `num_relays`
/// intermediate stations (num_relays + 1 links): 1 - (1 - w)^(N + 1).
Probability end_to_end_loss(Probability per_hop, std::uint32_t num_relays);

/// Retransmission timeout for a sender waiting on an acknowledgment:
/// 2 RTT + 3 T_ack.
double ack_timeout(double rtt_s, double t_ack_s);

/// Linearized residual per-hop loss after `n` total transmission attempts:
/// (8 ber L)^n. Valid only while 8 ber L < 1; rejected otherwise rather
/// than clamped, so a meaningless operating point is visible to the caller.
Probability residual_hop_loss_approx(double ber, std::uint32_t packet_len_bytes,
                                     std::uint32_t n);

/// Exact residual per-hop loss: probability that all `n` independent
/// attempts are corrupted, per_hop^n. Always <= the linearized form above
/// for the same parameters.
Probability residual_hop_loss_exact(Probability per_hop, std::uint32_t n);

/// Delivery-success probability of the linearized end-to-end model,
/// (1 - (8 ber L)^n)^N (1 - 8 ber L). Note this is a *delivery* probability:
/// it tends to 1 as ber -> 0. The simulator's end-to-end loss is compared
/// against 1 minus this value.
Probability end_to_end_delivery_approx(double ber, std::uint32_t packet_len_bytes,
                                       std::uint32_t n, std::uint32_t num_relays);

struct LossCurveRow {
    double ber = 0.0;
    std::uint32_t num_relays = 0;
    double loss = 0.0;
};

/// End-to-end loss over a (ber, relay-count) grid. Rows are emitted with the
/// relay count as the major key (in the order given) and ber ascending within
/// each relay count. Domain errors name the offending grid point.
std::vector<LossCurveRow> loss_curve(std::vector<double> ber_grid,
                                     std::uint32_t packet_len_bytes,
                                     const std::vector<std::uint32_t>& relay_counts);

} // namespace relaysim::analytic

#endif
