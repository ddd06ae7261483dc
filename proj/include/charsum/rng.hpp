#pragma once

#include <cstdint>
#include <vector>

namespace charsum {

// Deterministic random source shared by the CLI and the test suites.
//
// Contract (fixed so a port in another language can replicate runs):
//   * generator: xoshiro256** 1.0, 4x64-bit state;
//     output = rotl(s1 * 5, 7) * 9, then the standard state update
//     (t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
//      s3 = rotl(s3, 45)).
//   * seeding: s0..s3 are four consecutive outputs of splitmix64 started
//     at the user seed.
//   * next_below(n): rejection sampling; threshold = (2^64 - n) mod n,
//     redraw while next() < threshold, return next() mod n.
//   * sample_distinct(universe, m): repeated next_below(universe) draws
//     inserted into a set until m distinct values; returned sorted.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            s = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, n); n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return r % n;
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// m distinct values from [0, universe), sorted ascending.  m <= universe.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::size_t m);

}  // namespace charsum
