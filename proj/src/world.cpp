#include "relaysim/world.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "relaysim/analytic.hpp"

namespace relaysim {

bool sample_corruption(SamplingMode mode, RandomStream& rng,
                       std::uint32_t length_bytes,
                       std::uint64_t packet_threshold,
                       std::uint64_t bit_threshold) {
    if (mode == SamplingMode::Packet) return rng.bernoulli(packet_threshold);
    // Per-bit mode draws every bit unconditionally so the stream position
    // after a frame never depends on where the first flip happened.
    bool corrupted = false;
    const std::uint64_t bits = 8ULL * length_bytes;
    for (std::uint64_t i = 0; i < bits; ++i)
        corrupted |= rng.bernoulli(bit_threshold);
    return corrupted;
}

void FateTracker::on_generated(std::uint64_t origin, SimTime now) {
    if (origin != records_.size())
        throw std::logic_error("origins must be minted sequentially");
    Record r;
    r.generated_at = now;
    records_.push_back(r);
}

void FateTracker::on_admitted(std::uint64_t origin) {
    records_.at(origin).copies++;
}

void FateTracker::on_retx_drop(std::uint64_t origin, bool last_attempt_overflowed) {
    records_.at(origin).last_drop =
        last_attempt_overflowed ? Cause::Overflow : Cause::Channel;
}

void FateTracker::on_slot_freed(std::uint64_t origin) {
    Record& r = records_.at(origin);
    if (r.copies <= 0) throw std::logic_error("slot freed with no copies outstanding");
    r.copies--;
}

bool FateTracker::on_delivered(std::uint64_t origin, SimTime now) {
    Record& r = records_.at(origin);
    if (r.delivered) return false;
    r.delivered = true;
    r.delivered_at = now;
    return true;
}

SimTime FateTracker::generated_time(std::uint64_t origin) const {
    return records_.at(origin).generated_at;
}

void FateTracker::finalize(Metrics& m) const {
    for (const Record& r : records_) {
        if (r.delivered) continue;  // counted when it happened
        if (r.copies > 0) {
            m.in_flight_at_end++;
        } else if (r.last_drop == Cause::Overflow) {
            m.dropped_buffer_overflow++;
        } else if (r.last_drop == Cause::Channel) {
            m.dropped_retx_limit++;
        } else {
            throw std::logic_error("packet died without any recorded drop");
        }
    }
}

World::World(const ScenarioConfig& cfg) : config_(cfg) {
    config_.validate_and_normalize();
    if (!config_.seed_set)
        throw ConfigError("seed", "a seed is required to run a simulation");

    th_data_packet_ = RandomStream::threshold(
        analytic::per_hop_loss(config_.ber, config_.packet_len).value());
    th_ack_packet_ = RandomStream::threshold(
        analytic::per_hop_loss(config_.ber, config_.ack_len).value());
    th_bit_ = RandomStream::threshold(config_.ber);

    prop_ps_ = ps_from_seconds(config_.prop_delay_s);
    check_ps_ = ps_from_seconds(config_.check_delay_s);
    tx_data_ps_ = ps_from_seconds(config_.serialization_time_s());
    tx_ack_ps_ = ps_from_seconds(config_.ack_serialization_time_s());
    const SimTime timeout_ps =
        ps_from_seconds(analytic::ack_timeout(config_.rtt_s(), config_.ack_time_s()));

    const std::uint32_t n_stations = config_.relays + 2;
    stations_.reserve(n_stations);
    for (std::uint32_t i = 0; i < n_stations; ++i) {
        const Role role = i == 0 ? Role::Src
                        : i == n_stations - 1 ? Role::Dst
                                              : Role::Relay;
        std::string name = role == Role::Src   ? "SRC"
                         : role == Role::Dst   ? "DST"
                                               : "R" + std::to_string(i);
        Station::Params p;
        // A source with zero slots could never send anything; B = 0 is
        // meaningful for relays (reject everything), so only SRC is clamped.
        p.capacity = role == Role::Src   ? std::max(1u, config_.buffer_slots)
                   : role == Role::Relay ? config_.buffer_slots
                                         : 0;
        p.max_transmissions = static_cast<std::uint16_t>(config_.max_transmissions);
        p.ack_timeout = timeout_ps;
        p.data_len = config_.packet_len;
        p.ack_len = config_.ack_len;
        p.dup_window = config_.dup_window;
        stations_.emplace_back(i, role, std::move(name), p);
    }
    stations_[0].set_generate_limit(
        config_.stop_packets ? *config_.stop_packets
                             : std::numeric_limits<std::uint64_t>::max());

    const std::uint32_t n_links = config_.relays + 1;
    links_.reserve(n_links);
    for (std::uint32_t i = 0; i < n_links; ++i) {
        const std::string base = "link" + std::to_string(i);
        links_.push_back(LinkRuntime{RandomStream(config_.seed, base + "/data"),
                                     RandomStream(config_.seed, base + "/ack"),
                                     0, 0});
    }
}

void World::dispatch(const Event& e, std::vector<Action>& out) {
    switch (e.kind) {
        case EventKind::ArrivalComplete:
            stations_[e.station].on_frame_arrival(e.frame, clock_, out);
            break;
        case EventKind::TransmitComplete:
            stations_[e.station].on_transmit_complete(e.dir, clock_, out);
            break;
        case EventKind::TimerFire:
            stations_[e.station].on_timeout(e.seq, e.token, clock_, out);
            break;
    }
}

void World::do_transmit(std::uint32_t station, const Action& a, SimTime now) {
    const bool down = a.dir == Direction::Downstream;
    const std::uint32_t link = down ? station : station - 1;
    LinkRuntime& l = links_[link];
    SimTime& busy_until = down ? l.fwd_busy_until : l.rev_busy_until;
    if (now < busy_until) throw std::logic_error("link direction already busy");
    const SimTime tx_time = a.frame.kind == FrameKind::Data ? tx_data_ps_ : tx_ack_ps_;
    busy_until = now + tx_time;

    Frame f = a.frame;
    if (down) {
        f.corrupted = sample_corruption(config_.sampling_mode, l.data_rng, f.length,
                                        th_data_packet_, th_bit_);
        metrics_.total_transmissions++;
    } else if (config_.ideal_acks) {
        f.corrupted = false;
    } else {
        f.corrupted = sample_corruption(config_.sampling_mode, l.ack_rng, f.length,
                                        th_ack_packet_, th_bit_);
    }

    Event done;
    done.time = now + tx_time;
    done.kind = EventKind::TransmitComplete;
    done.station = station;
    done.dir = a.dir;
    queue_.schedule(done);

    Event arrival;
    arrival.time = now + tx_time + prop_ps_ + check_ps_;
    arrival.kind = EventKind::ArrivalComplete;
    arrival.station = down ? station + 1 : station - 1;
    arrival.dir = a.dir;
    arrival.frame = f;
    queue_.schedule(arrival);
}

void World::apply_actions(std::uint32_t station, const std::vector<Action>& actions,
                          SimTime now, SimObserver* observer) {
    for (const Action& a : actions) {
        if (observer) observer->on_action(station, a, now);
        switch (a.kind) {
            case Action::Kind::Generated:
                metrics_.generated++;
                fates_.on_generated(a.frame.origin, now);
                break;
            case Action::Kind::Admitted:
                metrics_.admitted_total++;
                fates_.on_admitted(a.frame.origin);
                break;
            case Action::Kind::StartTransmit:
                do_transmit(station, a, now);
                break;
            case Action::Kind::SetTimer: {
                Event ev;
                ev.time = a.fire_time;
                ev.kind = EventKind::TimerFire;
                ev.station = station;
                ev.seq = a.seq;
                ev.token = a.token;
                queue_.schedule(ev);
                break;
            }
            case Action::Kind::CancelTimer:
                queue_.cancel_timer(a.token);
                break;
            case Action::Kind::DeliverToApp: {
                if (fates_.on_delivered(a.frame.origin, now)) {
                    const SimTime lat = now - fates_.generated_time(a.frame.origin);
                    metrics_.delivered_unique++;
                    sum_latency_ps_ += lat;
                    if (lat > max_latency_ps_) max_latency_ps_ = lat;
                    if (!any_delivery_) {
                        any_delivery_ = true;
                        first_delivery_ps_ = now;
                        first_latency_ps_ = lat;
                    }
                    last_delivery_ps_ = now;
                }
                break;
            }
            case Action::Kind::Drop:
                if (a.reason == DropReason::Duplicate) {
                    metrics_.duplicates_suppressed++;
                } else if (a.reason == DropReason::BufferOverflow) {
                    metrics_.overflow_events++;
                    if (station == 0)
                        throw std::logic_error("source cannot reject arrivals");
                    stations_[station - 1].note_downstream_overflow(a.frame.seq);
                } else {
                    metrics_.retx_drop_events++;
                    fates_.on_retx_drop(a.frame.origin, a.last_attempt_overflowed);
                }
                break;
            case Action::Kind::SlotFreed:
                fates_.on_slot_freed(a.frame.origin);
                break;
        }
    }
}

void World::run(SimObserver* observer) {
    std::vector<Action> actions;
    stations_[0].start(0, actions);
    apply_actions(0, actions, 0, observer);

    const SimTime horizon = config_.stop_seconds
                                ? ps_from_seconds(*config_.stop_seconds)
                                : std::numeric_limits<SimTime>::max();
    while (auto e = queue_.pop(horizon)) {
        clock_ = e->time;
        if (observer) observer->on_event(*e, clock_);
        actions.clear();
        dispatch(*e, actions);
        apply_actions(e->station, actions, clock_, observer);
    }

    if (config_.stop_seconds) {
        if (queue_.drained())
            throw std::logic_error(
                "event queue drained before the stop time with a saturating source");
        finalize_metrics(horizon);
    } else {
        finalize_metrics(queue_.last_popped_time());
    }
    if (observer) observer->on_run_end(metrics_);
}

void World::finalize_metrics(SimTime end_time) {
    metrics_.end_time_s = to_seconds(end_time);
    fates_.finalize(metrics_);

    for (const Station& st : stations_) {
        const StationCounters& c = st.counters();
        metrics_.stale_acks += c.stale_acks;
        metrics_.timeouts_fired += c.timeouts;
        metrics_.corrupted_replies += c.corrupted_replies;
    }
    metrics_.stale_timer_cancels = queue_.stale_cancels();

    if (metrics_.delivered_unique == 0) {
        metrics_.starved = true;
        metrics_.utilization = 0.0;
    } else {
        metrics_.first_delivery_time_s = to_seconds(first_delivery_ps_);
        metrics_.last_delivery_time_s = to_seconds(last_delivery_ps_);
        metrics_.first_delivery_latency_s = to_seconds(first_latency_ps_);
        metrics_.max_latency_s = to_seconds(max_latency_ps_);
        const SimTime window_end = config_.stop_seconds ? end_time : last_delivery_ps_;
        const SimTime window_ps = window_end - first_delivery_ps_ + tx_data_ps_;
        metrics_.utilization =
            (static_cast<double>(metrics_.delivered_unique) * 8.0 * config_.packet_len) /
            (config_.bandwidth_bps * to_seconds(window_ps));
        // Deliveries are at least one serialization apart, so the ratio can
        // exceed 1 only through the picosecond rounding of the serialization
        // time itself.
        if (metrics_.utilization > 1.0 + 1e-9)
            throw std::logic_error("utilization above 1: accounting bug");
        if (metrics_.utilization > 1.0) metrics_.utilization = 1.0;
        metrics_.mean_latency_s =
            static_cast<double>(sum_latency_ps_) /
            (static_cast<double>(metrics_.delivered_unique) *
             static_cast<double>(kPsPerSecond));
    }

    const std::uint64_t resolved = metrics_.generated - metrics_.in_flight_at_end;
    const std::uint64_t lost = metrics_.dropped_retx_limit + metrics_.dropped_buffer_overflow;
    metrics_.end_to_end_loss =
        resolved == 0 ? 0.0 : static_cast<double>(lost) / static_cast<double>(resolved);
}

} // namespace relaysim
