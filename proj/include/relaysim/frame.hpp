#ifndef RELAYSIM_FRAME_HPP
#define RELAYSIM_FRAME_HPP

#include <cstdint>

namespace relaysim {

enum class FrameKind : std::uint8_t { Data, Ack, Nack };

/// One frame on a link. Control frames (Ack/Nack) carry in `seq` the
/// sequence number they refer to. `corrupted` is channel state, not payload:
/// a receiver may only branch on it, never repair it.
struct Frame {
    FrameKind kind = FrameKind::Data;
    bool corrupted = false;
    std::uint16_t attempt = 0;   ///< 1-based transmission attempt (data only)
    std::uint32_t length = 0;    ///< bytes on the wire
    std::uint64_t seq = 0;       ///< per-link sequence number
    std::uint64_t origin = 0;    ///< id assigned at the source, survives relaying
};

} // namespace relaysim

#endif
