#ifndef RELAYSIM_ACTIONS_HPP
#define RELAYSIM_ACTIONS_HPP

#include <cstdint>

#include "relaysim/frame.hpp"
#include "relaysim/simtime.hpp"

namespace relaysim {

enum class Direction : std::uint8_t { Downstream, Upstream };

enum class DropReason : std::uint8_t { RetxLimit, BufferOverflow, Duplicate };

/// Station outputs. The station logic is a pure state machine: it never
/// touches the clock or the event queue, it only emits actions and the
/// kernel interprets them. That keeps every protocol rule unit-testable
/// without a running simulation.
struct Action {
    enum class Kind : std::uint8_t {
        Generated,      ///< source minted a new packet (origin set)
        Admitted,       ///< frame accepted into the local buffer
        StartTransmit,  ///< put `frame` on the wire in `dir`
        SetTimer,       ///< arm retransmission timer `token` for `seq` at `fire_time`
        CancelTimer,    ///< disarm timer `token`
        DeliverToApp,   ///< destination passed `frame` up
        Drop,           ///< copy discarded; `reason` says why
        SlotFreed,      ///< buffer slot released (after final ack or drop)
    };

    Kind kind;
    Direction dir = Direction::Downstream;
    Frame frame{};
    std::uint64_t seq = 0;
    std::uint64_t token = 0;
    SimTime fire_time = 0;
    DropReason reason = DropReason::RetxLimit;
    /// For Drop{RetxLimit}: true when the copy's last attempt is known to
    /// have been rejected downstream for lack of buffer space, so the loss
    /// is attributed to overflow rather than to channel noise.
    bool last_attempt_overflowed = false;
};

} // namespace relaysim

#endif
