#ifndef RELAYSIM_SIMTIME_HPP
#define RELAYSIM_SIMTIME_HPP

#include <cstdint>
#include <string>

namespace relaysim {

/// Virtual time in integer picoseconds. Integer time makes simultaneity
/// exact: two causally tied paths that meet at the same instant compare
/// equal instead of differing by a rounding ulp, so tie-breaking rules are
/// real semantics rather than floating-point luck. The range covers ~208
/// days of virtual time, far beyond any supported run.
using SimTime = std::uint64_t;

inline constexpr SimTime kPsPerSecond = 1'000'000'000'000ULL;

/// Hard ceiling for scheduled event times. Leaves generous headroom below
/// the uint64 limit so sums of a few intervals can never wrap.
inline constexpr SimTime kMaxSimTime = kPsPerSecond * 10'000'000ULL;

/// Seconds → picoseconds, rounding to nearest. Callers validate ranges
/// before converting; this asserts the result is representable.
SimTime ps_from_seconds(double s);

inline double to_seconds(SimTime t) {
    return static_cast<double>(t) / static_cast<double>(kPsPerSecond);
}

/// Exact decimal rendering "s.pppppppppppp" (12 fractional digits), used by
/// the trace writer; avoids any double-formatting round-off.
std::string format_sim_time(SimTime t);

} // namespace relaysim

#endif
