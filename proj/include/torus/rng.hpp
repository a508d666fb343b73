#pragma once

#include <cstdint>

namespace torus {

// Deterministic 64-bit generator (splitmix64) with explicit distribution
// mappings. Map bytes, replays and bot behavior must be reproducible from a
// seed alone, so nothing here may depend on standard-library distribution
// internals, which vary between implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t nextU64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound == 0 returns 0.
    std::uint64_t uniformBound(std::uint64_t bound) {
        return bound == 0 ? 0 : nextU64() % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniformRange(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(uniformBound(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform real in [0, 1).
    double uniformReal() {
        return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
    }

    double uniformReal(double lo, double hi) {
        return lo + (hi - lo) * uniformReal();
    }

    // Derive an independent substream seed.
    std::uint64_t fork() { return nextU64(); }

private:
    std::uint64_t state_;
};

}  // namespace torus
