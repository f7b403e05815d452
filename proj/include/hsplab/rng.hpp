// Seeded, reproducible randomness. The generator is std::mt19937_64 (the
// 64-bit Mersenne Twister, fixed by the C++ standard), and all derived draws
// use the explicit reductions below, so equal seeds give identical streams
// on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace hsplab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return double(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n) by rejection on the top range.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hsplab
