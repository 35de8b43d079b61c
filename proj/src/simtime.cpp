#include "relaysim/simtime.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace relaysim {

SimTime ps_from_seconds(double s) {
    if (!(s >= 0.0)) throw std::logic_error("negative duration");
    const double ps = std::round(s * static_cast<double>(kPsPerSecond));
    if (ps > static_cast<double>(kMaxSimTime))
        throw std::logic_error("duration exceeds clock range");
    return static_cast<SimTime>(ps);
}

std::string format_sim_time(SimTime t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%llu.%012llu",
                  static_cast<unsigned long long>(t / kPsPerSecond),
                  static_cast<unsigned long long>(t % kPsPerSecond));
    return buf;
}

} // namespace relaysim
