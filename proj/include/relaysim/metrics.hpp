#ifndef RELAYSIM_METRICS_HPP
#define RELAYSIM_METRICS_HPP

#include <cstdint>

namespace relaysim {

/// End-of-run snapshot. Loss counters are per-origin fates, not per-event:
/// dropped_retx_limit + dropped_buffer_overflow counts packets whose last
/// copy died, attributed to buffer overflow when the final attempt is known
/// to have been rejected downstream for space and to the channel otherwise.
/// Event-level tallies (retx_drop_events, overflow_events) are kept
/// separately; they can exceed the fate counts because one packet may
/// overflow several times before getting through.
struct Metrics {
    std::uint64_t generated = 0;
    std::uint64_t delivered_unique = 0;
    std::uint64_t duplicates_suppressed = 0;
    std::uint64_t dropped_retx_limit = 0;
    std::uint64_t dropped_buffer_overflow = 0;
    std::uint64_t total_transmissions = 0;   ///< DATA frames put on any wire
    std::uint64_t stale_acks = 0;
    std::uint64_t in_flight_at_end = 0;

    std::uint64_t admitted_total = 0;        ///< buffer slots ever allocated
    std::uint64_t retx_drop_events = 0;      ///< per-link attempt exhaustions
    std::uint64_t overflow_events = 0;       ///< arrival rejections, full buffer
    std::uint64_t timeouts_fired = 0;
    std::uint64_t corrupted_replies = 0;
    std::uint64_t stale_timer_cancels = 0;

    /// Unique delivered payload over bandwidth × measurement window. The
    /// window opens one frame-serialization before the first delivery
    /// completes (so a lossless saturated run measures 1 up to rounding) and
    /// closes at the last delivery, or at the stop time for duration-limited
    /// runs. Clamped to [0, 1].
    double utilization = 0.0;
    double end_to_end_loss = 0.0;  ///< lost fates / (generated − in flight)
    double mean_latency_s = 0.0;   ///< generation → first delivery, delivered only
    double max_latency_s = 0.0;
    double first_delivery_latency_s = 0.0;
    double first_delivery_time_s = 0.0;
    double last_delivery_time_s = 0.0;
    double end_time_s = 0.0;
    bool starved = false;          ///< nothing delivered; utilization forced to 0
};

} // namespace relaysim

#endif
