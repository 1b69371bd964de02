#pragma once

#include <cstdint>

namespace mopsoplus {

/// PCG32 generator (O'Neill's pcg32_oneseq with stream selection).
///
/// The standard <random> distributions are implementation-defined, so all
/// draws used by the optimiser go through this class to keep runs
/// bit-reproducible across platforms and library versions.
class Pcg32 {
public:
    Pcg32() : Pcg32(0x853c49e6748fea9bULL, 0xda3e39cb94b95bdbULL) {}

    Pcg32(std::uint64_t seed, std::uint64_t stream) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform on [0, bound) without modulo bias (Lemire's method).
    std::uint32_t next_below(std::uint32_t bound) {
        std::uint64_t m = std::uint64_t(next_u32()) * bound;
        auto lo = static_cast<std::uint32_t>(m);
        if (lo < bound) {
            std::uint32_t threshold = (0u - bound) % bound;
            while (lo < threshold) {
                m = std::uint64_t(next_u32()) * bound;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    /// Uniform integer on the inclusive range [lo, hi].
    std::int32_t uniform_int(std::int32_t lo, std::int32_t hi) {
        return lo + static_cast<std::int32_t>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

    /// Uniform double on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (next_u32() >> 31) != 0u; }

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

}  // namespace mopsoplus
