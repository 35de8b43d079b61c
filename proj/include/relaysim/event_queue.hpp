#ifndef RELAYSIM_EVENT_QUEUE_HPP
#define RELAYSIM_EVENT_QUEUE_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "relaysim/actions.hpp"
#include "relaysim/frame.hpp"
#include "relaysim/simtime.hpp"

namespace relaysim {

enum class EventKind : std::uint8_t { ArrivalComplete, TransmitComplete, TimerFire };

struct Event {
    SimTime time = 0;
    std::uint8_t cls = 1;         ///< assigned by the queue; see schedule()
    std::uint64_t tiebreak = 0;   ///< assigned by the queue; breaks remaining ties
    EventKind kind = EventKind::ArrivalComplete;
    std::uint32_t station = 0;    ///< station the event is dispatched to
    Direction dir = Direction::Downstream;
    Frame frame{};                ///< ArrivalComplete only
    std::uint64_t seq = 0;        ///< TimerFire only
    std::uint64_t token = 0;      ///< TimerFire only
};

/// Total order (time, class, tiebreak). The class puts control-frame
/// arrivals (ACK/NACK) ahead of anything else scheduled for the same
/// instant: when an ACK that frees a buffer slot lands at exactly the
/// moment the next data frame arrives, the slot is freed first and the
/// frame is admitted. With an integer clock such ties are exact, so the
/// outcome must be pinned by the order, not by which event was scheduled
/// first. Remaining ties pop in insertion order. Timer cancellation is
/// lazy: cancelled fires stay in the heap and are skipped on pop, so
/// cancel is O(1) and the heap never needs removal.
class EventQueue {
  public:
    void schedule(Event e) {
        if (e.time < last_popped_time_)
            throw std::logic_error("event scheduled in the past");
        if (e.time > kMaxSimTime)
            throw std::runtime_error(
                "virtual clock exhausted (10^7 simulated seconds); shorten the run");
        e.cls = (e.kind == EventKind::ArrivalComplete && e.frame.kind != FrameKind::Data)
                    ? 0
                    : 1;
        e.tiebreak = ++tiebreak_counter_;
        if (e.kind == EventKind::TimerFire) outstanding_timers_.insert(e.token);
        heap_.push(e);
    }

    void cancel_timer(std::uint64_t token) {
        if (outstanding_timers_.erase(token))
            cancelled_timers_.insert(token);
        else
            ++stale_cancels_;  // already fired (or cancelled twice)
    }

    /// Next live event with time ≤ horizon, or nullopt. Cancelled timer
    /// fires are consumed silently regardless of the horizon check order —
    /// they are skipped before the horizon is applied, so a cancelled fire
    /// never blocks the queue.
    std::optional<Event> pop(SimTime horizon) {
        while (!heap_.empty()) {
            const Event& top = heap_.top();
            if (top.kind == EventKind::TimerFire && cancelled_timers_.count(top.token)) {
                cancelled_timers_.erase(top.token);
                heap_.pop();
                continue;
            }
            if (top.time > horizon) return std::nullopt;
            Event e = top;
            heap_.pop();
            last_popped_time_ = e.time;
            if (e.kind == EventKind::TimerFire) outstanding_timers_.erase(e.token);
            return e;
        }
        return std::nullopt;
    }

    bool drained() const {
        // Only cancelled timer fires may remain.
        return heap_.size() == cancelled_timers_.size();
    }

    std::uint64_t stale_cancels() const { return stale_cancels_; }
    SimTime last_popped_time() const { return last_popped_time_; }

  private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            if (a.cls != b.cls) return a.cls > b.cls;
            return a.tiebreak > b.tiebreak;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    std::unordered_set<std::uint64_t> outstanding_timers_;
    std::unordered_set<std::uint64_t> cancelled_timers_;
    std::uint64_t tiebreak_counter_ = 0;
    std::uint64_t stale_cancels_ = 0;
    SimTime last_popped_time_ = 0;
};

} // namespace relaysim

#endif
