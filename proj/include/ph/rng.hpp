#pragma once

#include <cstdint>

namespace ph {

/// splitmix64 stream; the generators' determinism contract is tied to this
/// exact sequence, so do not swap it out.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., bound-1} without modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace ph
