#pragma once

#include <cstdint>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

struct OracleOptions {
    int max_tasks = 12;  // guard against combinatorial blow-up
    int max_cores = 6;
    bool reverse = false; // enumerate in reversed order (order-independence checks)
    int threads = 1;      // 1 = serial reference; >1 (or 0 = all) = parallel kernel
    bool keep_witnesses = true;
    std::size_t max_stored_witnesses = 4096; // usage minima stay exact past the cap
};

/// Exhaustive search result: the exact minimum period with the solutions that
/// achieve it and their usage minima.
struct OracleResult {
    Rational min_period = Rational::infinity();
    std::vector<Solution> witnesses;
    long long witness_count = 0;
    long long min_big_used = 0;
    long long min_total_used = 0;
};

/// Enumerates every interval tiling, core-type assignment, and core allocation
/// that respects the platform, returning the exact optimum. The serial path is
/// the reference; the parallel path splits on the first stage boundary and
/// merges per-branch results in a fixed order, so both give identical answers.
OracleResult brute_force(const TaskChain& chain, const Platform& platform,
                         const OracleOptions& options = {});

} // namespace chainsched
