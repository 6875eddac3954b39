#pragma once

#include <cstdint>
#include <random>

namespace cmvar {

/// All randomness flows from a 64-bit seed through std::mt19937_64, whose
/// output stream is fixed by the standard. Range reduction is done by
/// rejection below so results are identical across platforms (the standard
/// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Independent per-task stream: deterministic in (seed, task index) so
    /// trials can run in any order or in parallel.
    static Rng for_task(uint64_t seed, uint64_t task) {
        return Rng(mix(seed, task));
    }

    uint64_t next() { return gen_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

private:
    static uint64_t mix(uint64_t a, uint64_t b) {
        // splitmix64 finalizer over the combined words
        uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

} // namespace cmvar
