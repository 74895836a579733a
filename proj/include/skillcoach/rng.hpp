#pragma once

#include <cmath>
#include <cstdint>

namespace skillcoach {

/// SplitMix64 step. Used both as a seed mixer and to expand one seed into
/// the wider xoshiro state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and up to three
/// lane indices (e.g. skill count, learner id, policy id). Streams derived
/// from distinct lanes are statistically independent, which keeps parallel
/// simulation order-insensitive.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) noexcept {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64_next(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64_next(s);
    s ^= b + 0xc2b2ae3d27d4eb4fULL;
    h ^= splitmix64_next(s);
    s ^= c + 0x165667b19e3779f9ULL;
    h ^= splitmix64_next(s);
    return h;
}

/// Deterministic per-stream random generator (xoshiro256**).
///
/// All distribution transforms are implemented here rather than via
/// <random> distributions so that sequences are identical across standard
/// library implementations. normal() consumes exactly two uniform draws,
/// which keeps streams replayable by independent oracle code.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + uniform() * (hi - lo); }

    /// Uniform integer in [lo, hi], both ends inclusive.
    int uniform_int(int lo, int hi) noexcept {
        const int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform() * span);
        return v > hi ? hi : v;
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() noexcept {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) noexcept { return mean + stddev * normal(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace skillcoach
