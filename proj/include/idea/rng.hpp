#pragma once

#include <cstdint>
#include <random>

namespace idea {

// Deterministic RNG used everywhere in the library. Wraps mt19937_64 but
// produces doubles from the raw bit stream ((x >> 11) * 2^-53) instead of
// going through std::uniform_real_distribution, so that a given seed yields
// the same draw sequence on every platform/standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [lo, hi], inclusive; unbiased via rejection
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    // Independent child stream for run `index`; mixing is splitmix64 so
    // nearby (seed, index) pairs do not produce correlated streams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng child(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(mix(master_seed, index));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace idea
