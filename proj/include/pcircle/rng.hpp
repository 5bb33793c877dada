#pragma once

#include <cstdint>

namespace pcircle::rng {

// splitmix64: small seedable generator with cheap stream derivation. Good
// enough statistics for area sampling, and trivially reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

// Stream for a given worker: decorrelates (seed, worker) pairs by running the
// worker index through one splitmix scramble.
inline SplitMix64 worker_stream(std::uint64_t seed, unsigned worker) {
    SplitMix64 scrambler(seed ^ (0xA0761D6478BD642FULL * (worker + 1ULL)));
    return SplitMix64(scrambler.next());
}

} // namespace pcircle::rng
