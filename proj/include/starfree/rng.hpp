#pragma once

#include <cstdint>

namespace starfree {

/// Counter-based generator: draw i of stream (seed, index) is
/// splitmix64(key + i * golden), so any graph of a sweep can be regenerated
/// on its own and the output does not depend on the standard library.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index) : key_(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform in [lo, hi], by rejection so every value is equally likely.
    long long uniform_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return lo + static_cast<long long>(x % span);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace starfree
