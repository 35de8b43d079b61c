#ifndef RELAYSIM_RNG_HPP
#define RELAYSIM_RNG_HPP

#include <cstdint>
#include <string_view>

namespace relaysim {

/// Derives an independent 64-bit seed from a master seed and a stable label.
/// Streams for different labels never share state, so adding a stream (for
/// example a new link direction) does not perturb the draws of any other.
std::uint64_t substream_seed(std::uint64_t master_seed, std::string_view label);

/// Deterministic 64-bit generator (xoshiro256++) with splitmix64 seeding.
/// The sequence is fully specified by the seed and identical on every
/// platform; standard-library distributions are deliberately not used.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);
    RandomStream(std::uint64_t master_seed, std::string_view label)
        : RandomStream(substream_seed(master_seed, label)) {}

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// One Bernoulli draw against a precomputed threshold (see threshold()).
    bool bernoulli(std::uint64_t threshold) { return next() < threshold; }

    /// Maps a probability to the u64 threshold used by bernoulli().
    static std::uint64_t threshold(double p);

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace relaysim

#endif
