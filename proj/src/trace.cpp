#include "relaysim/trace.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <string>

namespace relaysim {
namespace {

const char* frame_kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::Data: return "data";
        case FrameKind::Ack: return "ack";
        case FrameKind::Nack: return "nack";
    }
    return "?";
}

} // namespace

void TraceWriter::line(SimTime now, std::uint32_t station, const char* kind,
                       std::uint64_t seq, std::uint32_t attempt,
                       const std::string& detail) {
    os_ << format_sim_time(now) << '\t' << world_.station(station).name() << '\t'
        << kind << '\t' << seq << '\t' << attempt << '\t' << detail << '\n';
}

void TraceWriter::on_event(const Event& e, SimTime now) {
    switch (e.kind) {
        case EventKind::ArrivalComplete:
            line(now, e.station, "RX", e.frame.seq, e.frame.attempt,
                 std::string(frame_kind_name(e.frame.kind)) +
                     (e.frame.corrupted ? " corrupt" : " clean"));
            break;
        case EventKind::TransmitComplete:
            line(now, e.station, "TXDONE", 0, 0,
                 e.dir == Direction::Downstream ? "down" : "up");
            break;
        case EventKind::TimerFire:
            line(now, e.station, "TIMEOUT", e.seq, 0, "");
            break;
    }
}

void TraceWriter::on_action(std::uint32_t station, const Action& a, SimTime now) {
    switch (a.kind) {
        case Action::Kind::Generated:
            line(now, station, "GEN", a.frame.seq, 0,
                 "origin=" + std::to_string(a.frame.origin));
            break;
        case Action::Kind::Admitted:
            line(now, station, "ADMIT", a.frame.seq, 0,
                 "origin=" + std::to_string(a.frame.origin));
            break;
        case Action::Kind::StartTransmit:
            line(now, station, "TX", a.frame.seq, a.frame.attempt,
                 std::string(frame_kind_name(a.frame.kind)) +
                     (a.dir == Direction::Downstream ? " down" : " up"));
            break;
        case Action::Kind::SetTimer:
            line(now, station, "TIMER_SET", a.seq, 0,
                 "fire=" + format_sim_time(a.fire_time));
            break;
        case Action::Kind::CancelTimer:
            line(now, station, "TIMER_CANCEL", a.seq, 0, "");
            break;
        case Action::Kind::DeliverToApp:
            line(now, station, "DELIVER", a.frame.seq, a.frame.attempt,
                 "origin=" + std::to_string(a.frame.origin));
            break;
        case Action::Kind::Drop:
            line(now, station, "DROP", a.frame.seq, a.frame.attempt,
                 a.reason == DropReason::RetxLimit      ? "retx_limit"
                 : a.reason == DropReason::BufferOverflow ? "overflow"
                                                          : "duplicate");
            break;
        case Action::Kind::SlotFreed:
            line(now, station, "FREE", a.seq, 0,
                 "origin=" + std::to_string(a.frame.origin));
            break;
    }
}

} // namespace relaysim
