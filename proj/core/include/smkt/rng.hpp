#pragma once

#include <cstdint>
#include <vector>

namespace smkt {

/// Deterministic pseudo-random source used by every seeded operation in the
/// toolkit (fixture generators, dataset splits, SMO index picks).
///
/// Generator: splitmix64 (Steele, Lea & Flood 2014). The state walks a
/// fixed 2^64 cycle in steps of the golden-ratio increment; each output is
/// the mixed state. Independent streams are obtained by mixing the stream
/// index into the seed before the first step, which scatters the starting
/// points pseudo-randomly along the cycle.
///
/// All derived draws (unit doubles, normals, bounded integers, shuffles)
/// are specified here in terms of raw 64-bit outputs only, so identical
/// (seed, stream) gives identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed + 0x9E3779B97F4A7C15ull * stream)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1): top 53 bits of one output.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_normal();

    /// Uniform integer in [0, bound) by rejection; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace smkt
