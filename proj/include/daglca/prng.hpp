#pragma once

#include <cstdint>

namespace daglca {

// SplitMix64 step. Fully specified, so generated instances and fingerprints
// are byte-identical across platforms (std:: distributions are not).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based stream: the n-th draw depends only on (seed, n).
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() { return splitmix64(state_); }

    // Uniform double in [0, 1) with 53 bits of mantissa.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) by rejection; bound > 0.
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

private:
    uint64_t state_;
};

// Derives an independent stream seed, used when one operation needs several
// unrelated random sources from a single user-supplied seed.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    uint64_t s = seed ^ (0x6A09E667F3BCC909ull + salt * 0x9E3779B97F4A7C15ull);
    return splitmix64(s);
}

}  // namespace daglca
