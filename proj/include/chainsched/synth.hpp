#pragma once

#include <cstdint>
#include <string>

#include "chainsched/chain.hpp"

namespace chainsched {

/// SplitMix64: tiny, seedable, portable. The exact draw order used by
/// generate() is documented in the README so corpora can be reproduced
/// independently of this implementation.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    /// Uniform double in [0, 1) with 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct GenSpec {
    int n_tasks = 20;
    double stateless_ratio = 0.5; // fraction of tasks marked replicable
    int weight_min = 1;
    int weight_max = 100;
    double slowdown_min = 1.0;
    double slowdown_max = 5.0;
    std::uint64_t seed = 0;
};

/// Deterministic synthetic chain: big weights uniform integers, little weights
/// ceil(big * slowdown) with a continuous-uniform slowdown, and exactly
/// round(n * stateless_ratio) tasks replicable at uniformly chosen positions.
TaskChain generate(const GenSpec& spec);

} // namespace chainsched
