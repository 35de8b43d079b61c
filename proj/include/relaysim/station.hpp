#ifndef RELAYSIM_STATION_HPP
#define RELAYSIM_STATION_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relaysim/actions.hpp"
#include "relaysim/frame.hpp"

namespace relaysim {

enum class Role : std::uint8_t { Src, Relay, Dst };

enum class SlotState : std::uint8_t { Queued, InFlight, AwaitingAck };

struct BufferSlot {
    Frame frame{};                    ///< outgoing copy; seq is ours, origin inherited
    SlotState state = SlotState::Queued;
    std::uint16_t attempts_used = 0;
    std::uint64_t timer_token = 0;
    bool timer_armed = false;
    /// ACK raced in while this slot's frame was still on the wire; the slot
    /// is released at transmit-complete instead of arming a timer.
    bool ack_while_in_flight = false;
    /// The most recent attempt was rejected downstream for lack of buffer
    /// space (reported back by the kernel, which sees both ends of a link).
    bool last_attempt_overflowed = false;
};

struct StationCounters {
    std::uint64_t tx_data = 0;
    std::uint64_t tx_control = 0;
    std::uint64_t duplicates = 0;        ///< clean data frames already seen
    std::uint64_t below_window_dups = 0; ///< subset of duplicates: seq fell off the window
    std::uint64_t overflow_rejects = 0;
    std::uint64_t corrupted_data = 0;
    std::uint64_t corrupted_replies = 0;
    std::uint64_t stale_acks = 0;
    std::uint64_t stale_nacks = 0;
    std::uint64_t retx_drops = 0;
    std::uint64_t timeouts = 0;
};

/// Per-station protocol logic as a pure state machine. Handlers take the
/// current virtual time and append Actions; they never schedule events or
/// draw randomness themselves. One instance per station; the kernel owns
/// event ordering and link timing.
class Station {
  public:
    struct Params {
        std::uint32_t capacity = 0;         ///< buffer slots (0 at DST)
        std::uint16_t max_transmissions = 1;///< total attempts per frame
        SimTime ack_timeout = 0;   ///< picoseconds
        std::uint32_t data_len = 0;         ///< bytes, SRC-minted frames
        std::uint32_t ack_len = 0;          ///< bytes, ACK/NACK frames
        std::uint32_t dup_window = 1024;
    };

    Station(std::uint32_t id, Role role, std::string name, const Params& p);

    /// SRC only: cap on how many origins may ever be minted.
    void set_generate_limit(std::uint64_t limit) { generate_limit_ = limit; }

    /// Kick-off at t = 0 (fills and starts the SRC pipeline; no-op elsewhere).
    void start(SimTime now, std::vector<Action>& out);

    void on_frame_arrival(const Frame& f, SimTime now, std::vector<Action>& out);
    void on_transmit_complete(Direction dir, SimTime now, std::vector<Action>& out);
    void on_timeout(std::uint64_t seq, std::uint64_t token, SimTime now,
                    std::vector<Action>& out);

    /// Mint fresh frames while the buffer has room and budget remains.
    void src_offer(SimTime now, std::vector<Action>& out);

    /// Kernel side-channel: our frame `seq` was rejected downstream because
    /// the receiver's buffer was full. Only flags the slot; emits nothing.
    void note_downstream_overflow(std::uint64_t seq);

    std::uint32_t id() const { return id_; }
    Role role() const { return role_; }
    const std::string& name() const { return name_; }
    const StationCounters& counters() const { return counters_; }
    std::uint32_t occupied_slots() const;
    bool data_transmitter_busy() const { return fwd_busy_; }

  private:
    BufferSlot* find_slot(std::uint64_t seq);
    int free_index() const;
    void release(std::uint64_t seq);
    void start_next_data(SimTime now, std::vector<Action>& out);
    void enqueue_reply(FrameKind kind, std::uint64_t seq, std::vector<Action>& out);
    void retransmit_or_drop(BufferSlot& slot, SimTime now, std::vector<Action>& out);
    bool is_duplicate(std::uint64_t seq);
    void record_seen(std::uint64_t seq);
    std::uint64_t make_token() { return (std::uint64_t(id_) << 48) | ++token_counter_; }

    std::uint32_t id_;
    Role role_;
    std::string name_;
    Params params_;

    std::vector<std::optional<BufferSlot>> buffer_;
    std::deque<std::uint64_t> pending_;       ///< seqs awaiting (re)transmission, FIFO
    std::optional<std::uint64_t> in_flight_;  ///< seq currently on the forward wire
    bool fwd_busy_ = false;

    std::deque<Frame> reply_queue_;            ///< ACK/NACKs waiting for the reverse wire
    bool rev_busy_ = false;

    std::set<std::uint64_t> seen_;             ///< receive-side duplicate window
    std::uint64_t highest_seen_ = 0;
    bool seen_any_ = false;

    std::uint64_t next_seq_ = 0;
    std::uint64_t next_origin_ = 0;
    std::uint64_t generate_limit_ = 0;
    std::uint64_t token_counter_ = 0;

    StationCounters counters_;
};

} // namespace relaysim

#endif
