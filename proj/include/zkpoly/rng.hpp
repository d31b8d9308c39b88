#pragma once

#include <cstdint>

namespace zkpoly {

/// SplitMix64, used as a counter-based generator: output i of a stream is a
/// fixed avalanche mix of seed + (i+1)*golden, so any position of a stream can
/// be sampled directly. Every randomized operation in the library takes a
/// 64-bit seed and draws from one of these streams, which is what makes
/// experiment records replayable.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix(state_);
    }

    /// Random access into the stream identified by `seed`.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        return mix(seed + (index + 1) * kGolden);
    }

    /// Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return next() >> 63; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace zkpoly
