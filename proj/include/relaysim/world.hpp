#ifndef RELAYSIM_WORLD_HPP
#define RELAYSIM_WORLD_HPP

#include <cstdint>
#include <vector>

#include "relaysim/actions.hpp"
#include "relaysim/event_queue.hpp"
#include "relaysim/metrics.hpp"
#include "relaysim/rng.hpp"
#include "relaysim/scenario.hpp"
#include "relaysim/station.hpp"

namespace relaysim {

/// Passive tap on the running simulation. `on_event` fires before the event
/// is dispatched (cancelled timers are consumed inside the queue and never
/// reach here); `on_action` fires for every action a station emits, in
/// emission order. Used by the trace writer and the test-side invariant
/// checkers; the kernel itself never depends on observers.
class SimObserver {
  public:
    virtual ~SimObserver() = default;
    virtual void on_event(const Event& e, SimTime now) { (void)e; (void)now; }
    virtual void on_action(std::uint32_t station, const Action& a, SimTime now) {
        (void)station; (void)a; (void)now;
    }
    virtual void on_run_end(const Metrics& m) { (void)m; }
};

/// One corruption decision for a frame of `length_bytes`, consuming a
/// deterministic number of draws per mode: exactly one in Packet mode,
/// exactly 8 × length in PerBit mode (no short-circuit). `packet_threshold`
/// must be RandomStream::threshold of the whole-frame corruption
/// probability, `bit_threshold` of the per-bit probability.
bool sample_corruption(SamplingMode mode, RandomStream& rng,
                       std::uint32_t length_bytes,
                       std::uint64_t packet_threshold,
                       std::uint64_t bit_threshold);

/// Per-origin bookkeeping: how many buffered copies of each packet exist
/// anywhere in the chain, whether it reached the application, and which
/// kind of failure killed the last copy otherwise. Copy counting gives an
/// exact conservation identity at any stop point.
class FateTracker {
  public:
    void on_generated(std::uint64_t origin, SimTime now);
    void on_admitted(std::uint64_t origin);
    void on_retx_drop(std::uint64_t origin, bool last_attempt_overflowed);
    void on_slot_freed(std::uint64_t origin);
    /// Returns true on the first delivery of this origin.
    bool on_delivered(std::uint64_t origin, SimTime now);

    void finalize(Metrics& m) const;  ///< fills fate-derived counters
    SimTime generated_time(std::uint64_t origin) const;

  private:
    enum class Cause : std::uint8_t { None, Channel, Overflow };
    struct Record {
        std::int32_t copies = 0;
        bool delivered = false;
        Cause last_drop = Cause::None;
        SimTime generated_at = 0;
        SimTime delivered_at = 0;
    };
    std::vector<Record> records_;
};

class World {
  public:
    explicit World(const ScenarioConfig& cfg);

    /// Runs to the configured stop condition and computes final metrics.
    void run(SimObserver* observer = nullptr);

    const Metrics& metrics() const { return metrics_; }
    const ScenarioConfig& config() const { return config_; }
    const Station& station(std::uint32_t id) const { return stations_[id]; }
    std::uint32_t station_count() const { return static_cast<std::uint32_t>(stations_.size()); }

  private:
    struct LinkRuntime {
        RandomStream data_rng;
        RandomStream ack_rng;
        SimTime fwd_busy_until = 0;
        SimTime rev_busy_until = 0;
    };

    void dispatch(const Event& e, std::vector<Action>& out);
    void apply_actions(std::uint32_t station, const std::vector<Action>& actions,
                       SimTime now, SimObserver* observer);
    void do_transmit(std::uint32_t station, const Action& a, SimTime now);
    void finalize_metrics(SimTime end_time);

    ScenarioConfig config_;
    std::vector<Station> stations_;
    std::vector<LinkRuntime> links_;
    EventQueue queue_;
    FateTracker fates_;
    Metrics metrics_;
    SimTime clock_ = 0;
    SimTime prop_ps_ = 0;
    SimTime check_ps_ = 0;
    SimTime tx_data_ps_ = 0;
    SimTime tx_ack_ps_ = 0;

    std::uint64_t th_data_packet_ = 0;  ///< whole-frame corruption, data length
    std::uint64_t th_ack_packet_ = 0;   ///< whole-frame corruption, ack length
    std::uint64_t th_bit_ = 0;

    SimTime first_delivery_ps_ = 0;
    SimTime last_delivery_ps_ = 0;
    SimTime first_latency_ps_ = 0;
    SimTime max_latency_ps_ = 0;
    unsigned __int128 sum_latency_ps_ = 0;  ///< exact; converted once at the end
    bool any_delivery_ = false;
};

} // namespace relaysim

#endif
