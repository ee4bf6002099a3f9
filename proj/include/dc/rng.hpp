#pragma once

#include <cstdint>

#include "dc/errors.hpp"

namespace dc {

/// SplitMix64 (Steele/Lea/Flood, as published with Java 8's SplittableRandom).
/// Used for all corpus generation so that emitted graphs are reproducible
/// bit-for-bit from (seed, tag) across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix(state);
    }

    /// Uniform integer in [0, bound) via rejection sampling (no modulo bias).
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound == 0) raise(errc::bad_argument, "bounded(0)");
        std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent substream for a given purpose tag.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag) {
        return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ull * (tag + 1)));
    }
};

} // namespace dc
