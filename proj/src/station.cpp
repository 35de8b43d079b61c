#include "relaysim/station.hpp"

#include <stdexcept>

namespace relaysim {

Station::Station(std::uint32_t id, Role role, std::string name, const Params& p)
    : id_(id), role_(role), name_(std::move(name)), params_(p) {
    buffer_.resize(params_.capacity);
}

std::uint32_t Station::occupied_slots() const {
    std::uint32_t n = 0;
    for (const auto& s : buffer_)
        if (s) ++n;
    return n;
}

BufferSlot* Station::find_slot(std::uint64_t seq) {
    for (auto& s : buffer_)
        if (s && s->frame.seq == seq) return &*s;
    return nullptr;
}

int Station::free_index() const {
    for (std::size_t i = 0; i < buffer_.size(); ++i)
        if (!buffer_[i]) return static_cast<int>(i);
    return -1;
}

void Station::release(std::uint64_t seq) {
    for (auto& s : buffer_)
        if (s && s->frame.seq == seq) {
            s.reset();
            return;
        }
    throw std::logic_error("release of unknown slot");
}

void Station::start(SimTime now, std::vector<Action>& out) {
    if (role_ == Role::Src) src_offer(now, out);
}

void Station::src_offer(SimTime now, std::vector<Action>& out) {
    (void)now;
    if (role_ != Role::Src) return;
    while (next_origin_ < generate_limit_) {
        const int idx = free_index();
        if (idx < 0) break;
        Frame f;
        f.kind = FrameKind::Data;
        f.length = params_.data_len;
        f.seq = next_seq_++;
        f.origin = next_origin_++;

        Action gen;
        gen.kind = Action::Kind::Generated;
        gen.frame = f;
        gen.seq = f.seq;
        out.push_back(gen);

        BufferSlot slot;
        slot.frame = f;
        buffer_[static_cast<std::size_t>(idx)] = slot;
        pending_.push_back(f.seq);

        Action adm;
        adm.kind = Action::Kind::Admitted;
        adm.frame = f;
        adm.seq = f.seq;
        out.push_back(adm);
    }
    start_next_data(now, out);
}

void Station::start_next_data(SimTime now, std::vector<Action>& out) {
    (void)now;
    if (fwd_busy_ || pending_.empty()) return;
    const std::uint64_t seq = pending_.front();
    pending_.pop_front();
    BufferSlot* slot = find_slot(seq);
    if (!slot) throw std::logic_error("queued seq without slot");
    slot->state = SlotState::InFlight;
    slot->attempts_used++;
    slot->frame.attempt = slot->attempts_used;
    slot->last_attempt_overflowed = false;
    in_flight_ = seq;
    fwd_busy_ = true;
    counters_.tx_data++;

    Action tx;
    tx.kind = Action::Kind::StartTransmit;
    tx.dir = Direction::Downstream;
    tx.frame = slot->frame;
    tx.seq = seq;
    out.push_back(tx);
}

void Station::enqueue_reply(FrameKind kind, std::uint64_t seq, std::vector<Action>& out) {
    Frame f;
    f.kind = kind;
    f.length = params_.ack_len;
    f.seq = seq;
    if (rev_busy_) {
        reply_queue_.push_back(f);
        return;
    }
    rev_busy_ = true;
    counters_.tx_control++;
    Action tx;
    tx.kind = Action::Kind::StartTransmit;
    tx.dir = Direction::Upstream;
    tx.frame = f;
    tx.seq = seq;
    out.push_back(tx);
}

bool Station::is_duplicate(std::uint64_t seq) {
    if (!seen_any_) return false;
    if (seen_.count(seq)) {
        counters_.duplicates++;
        return true;
    }
    // Sequence numbers that slid out of the window can no longer be
    // distinguished from retransmissions of very old frames; treating them
    // as duplicates is the safe direction (never deliver twice).
    if (seq + params_.dup_window <= highest_seen_) {
        counters_.duplicates++;
        counters_.below_window_dups++;
        return true;
    }
    return false;
}

void Station::record_seen(std::uint64_t seq) {
    seen_.insert(seq);
    if (!seen_any_ || seq > highest_seen_) highest_seen_ = seq;
    seen_any_ = true;
    while (!seen_.empty() && *seen_.begin() + params_.dup_window <= highest_seen_)
        seen_.erase(seen_.begin());
}

void Station::on_frame_arrival(const Frame& f, SimTime now, std::vector<Action>& out) {
    if (f.kind == FrameKind::Data) {
        if (f.corrupted) {
            counters_.corrupted_data++;
            enqueue_reply(FrameKind::Nack, f.seq, out);
        } else if (is_duplicate(f.seq)) {
            // Re-acknowledge so the sender stops retransmitting, but the
            // copy itself goes nowhere.
            enqueue_reply(FrameKind::Ack, f.seq, out);
            Action drop;
            drop.kind = Action::Kind::Drop;
            drop.reason = DropReason::Duplicate;
            drop.frame = f;
            drop.seq = f.seq;
            out.push_back(drop);
        } else if (role_ == Role::Dst) {
            record_seen(f.seq);
            enqueue_reply(FrameKind::Ack, f.seq, out);
            Action del;
            del.kind = Action::Kind::DeliverToApp;
            del.frame = f;
            del.seq = f.seq;
            out.push_back(del);
        } else {
            // Relay: admission decides whether an ACK is sent at all. A full
            // buffer drops silently; the upstream timeout will retry later,
            // by which time space may exist.
            const int idx = free_index();
            if (idx < 0) {
                counters_.overflow_rejects++;
                Action drop;
                drop.kind = Action::Kind::Drop;
                drop.reason = DropReason::BufferOverflow;
                drop.frame = f;
                drop.seq = f.seq;
                out.push_back(drop);
            } else {
                record_seen(f.seq);
                enqueue_reply(FrameKind::Ack, f.seq, out);
                BufferSlot slot;
                slot.frame = f;
                slot.frame.corrupted = false;
                slot.frame.attempt = 0;
                slot.frame.seq = next_seq_++;  // fresh seq for the next link
                buffer_[static_cast<std::size_t>(idx)] = slot;
                pending_.push_back(slot.frame.seq);
                Action adm;
                adm.kind = Action::Kind::Admitted;
                adm.frame = slot.frame;
                adm.seq = slot.frame.seq;
                out.push_back(adm);
                start_next_data(now, out);
            }
        }
        return;
    }

    // ACK / NACK path (sender side).
    if (f.corrupted) {
        counters_.corrupted_replies++;
        return;
    }
    BufferSlot* slot = find_slot(f.seq);
    if (f.kind == FrameKind::Ack) {
        if (!slot) {
            counters_.stale_acks++;
        } else if (slot->state == SlotState::AwaitingAck) {
            Action cancel;
            cancel.kind = Action::Kind::CancelTimer;
            cancel.token = slot->timer_token;
            cancel.seq = f.seq;
            out.push_back(cancel);
            slot->timer_armed = false;
            Action freed;
            freed.kind = Action::Kind::SlotFreed;
            freed.frame = slot->frame;
            freed.seq = f.seq;
            release(f.seq);
            out.push_back(freed);
        } else if (slot->state == SlotState::InFlight) {
            slot->ack_while_in_flight = true;
        } else {  // Queued: the pending retransmission is no longer needed
            for (auto it = pending_.begin(); it != pending_.end(); ++it)
                if (*it == f.seq) {
                    pending_.erase(it);
                    break;
                }
            Action freed;
            freed.kind = Action::Kind::SlotFreed;
            freed.frame = slot->frame;
            freed.seq = f.seq;
            release(f.seq);
            out.push_back(freed);
        }
    } else {  // Nack
        if (!slot || slot->state != SlotState::AwaitingAck) {
            // Either long gone or already being retransmitted; a NACK adds
            // nothing in both cases.
            counters_.stale_nacks++;
        } else {
            Action cancel;
            cancel.kind = Action::Kind::CancelTimer;
            cancel.token = slot->timer_token;
            cancel.seq = f.seq;
            out.push_back(cancel);
            slot->timer_armed = false;
            retransmit_or_drop(*slot, now, out);
        }
    }
    if (role_ == Role::Src) src_offer(now, out);
}

void Station::retransmit_or_drop(BufferSlot& slot, SimTime now, std::vector<Action>& out) {
    if (slot.attempts_used >= params_.max_transmissions) {
        counters_.retx_drops++;
        Action drop;
        drop.kind = Action::Kind::Drop;
        drop.reason = DropReason::RetxLimit;
        drop.frame = slot.frame;
        drop.seq = slot.frame.seq;
        drop.last_attempt_overflowed = slot.last_attempt_overflowed;
        out.push_back(drop);
        Action freed;
        freed.kind = Action::Kind::SlotFreed;
        freed.frame = slot.frame;
        freed.seq = slot.frame.seq;
        const std::uint64_t seq = slot.frame.seq;
        release(seq);
        out.push_back(freed);
        return;
    }
    slot.state = SlotState::Queued;
    pending_.push_back(slot.frame.seq);
    start_next_data(now, out);
}

void Station::on_transmit_complete(Direction dir, SimTime now, std::vector<Action>& out) {
    if (dir == Direction::Upstream) {
        rev_busy_ = false;
        if (!reply_queue_.empty()) {
            Frame f = reply_queue_.front();
            reply_queue_.pop_front();
            rev_busy_ = true;
            counters_.tx_control++;
            Action tx;
            tx.kind = Action::Kind::StartTransmit;
            tx.dir = Direction::Upstream;
            tx.frame = f;
            tx.seq = f.seq;
            out.push_back(tx);
        }
        return;
    }

    if (!in_flight_) throw std::logic_error("transmit complete with nothing in flight");
    const std::uint64_t seq = *in_flight_;
    in_flight_.reset();
    fwd_busy_ = false;
    BufferSlot* slot = find_slot(seq);
    if (!slot) throw std::logic_error("in-flight seq without slot");

    if (slot->ack_while_in_flight) {
        // Acknowledged before the wire even cleared; no timer needed.
        Action freed;
        freed.kind = Action::Kind::SlotFreed;
        freed.frame = slot->frame;
        freed.seq = seq;
        release(seq);
        out.push_back(freed);
    } else {
        slot->state = SlotState::AwaitingAck;
        slot->timer_token = make_token();
        slot->timer_armed = true;
        Action timer;
        timer.kind = Action::Kind::SetTimer;
        timer.seq = seq;
        timer.token = slot->timer_token;
        timer.fire_time = now + params_.ack_timeout;
        out.push_back(timer);
    }
    start_next_data(now, out);
    if (role_ == Role::Src) src_offer(now, out);
}

void Station::on_timeout(std::uint64_t seq, std::uint64_t token, SimTime now,
                         std::vector<Action>& out) {
    BufferSlot* slot = find_slot(seq);
    if (!slot || !slot->timer_armed || slot->timer_token != token ||
        slot->state != SlotState::AwaitingAck)
        throw std::logic_error("timer fired for a slot that no longer awaits it");
    counters_.timeouts++;
    slot->timer_armed = false;
    retransmit_or_drop(*slot, now, out);
    if (role_ == Role::Src) src_offer(now, out);
}

void Station::note_downstream_overflow(std::uint64_t seq) {
    if (BufferSlot* slot = find_slot(seq)) slot->last_attempt_overflowed = true;
}

} // namespace relaysim
