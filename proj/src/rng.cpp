#include "relaysim/rng.hpp"

#include <cmath>

namespace relaysim {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view label) {
    std::uint64_t x = master_seed ^ fnv1a64(label);
    // One extra scramble so master seeds that differ in a single bit do not
    // produce correlated substream seeds.
    return splitmix64(x);
}

RandomStream::RandomStream(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) w = splitmix64(x);
    // All-zero state is unreachable: splitmix64 is a bijection over the
    // counter, so at most one of the four outputs can be zero.
}

std::uint64_t RandomStream::threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~0ULL;
    // Round to nearest representable threshold; the quantization error is
    // 2^-64, far below any probability this simulator works with.
    const double scaled = std::ldexp(p, 64);
    if (scaled >= 0x1.0p64) return ~0ULL;
    return static_cast<std::uint64_t>(scaled);
}

} // namespace relaysim
