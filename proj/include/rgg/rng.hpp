#pragma once

#include <cstdint>
#include <random>

namespace rgg {

/// All randomness in the library flows through this wrapper so results are
/// reproducible for a given seed, independent of standard-library
/// distribution internals.
class RandomEngine {
 public:
    explicit RandomEngine(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
    std::mt19937_64 eng_;
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t x = a + 0x9E3779B97F4A7C15ull * (b + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace rgg
