#pragma once

#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

struct SimConfig {
    long long streams = 500;
    long long warmup_streams = 100;  // completions excluded from the measurement
    long long buffers_per_link = -1; // <0 = take each link's count from buffer_plan
};

struct SimReport {
    Rational measured_period;
    std::vector<long long> completion_order; // stream ids by completion
    std::vector<Rational> completions;       // completion time per stream id
    std::vector<double> per_stage_busy;
    bool ordering_preserved = false;
};

/// Buffers per consecutive stage pair: lcm of the two replica counts, which
/// covers the 1->n, n->1 and m->m cases exactly.
std::vector<long long> buffer_plan(const Solution& solution);

/// Deterministic dataflow timing of a solution on virtual cores.
///
/// Replica k of an r-replica stage serves streams congruent to k mod r; a
/// stage starts a stream once its input slot is full and its output slot has
/// been pulled by the consumer. Processing time is the stage's one-core weight
/// on its core type (replication divides throughput, not latency). Event times
/// are exact rationals, so runs are bit-reproducible.
SimReport simulate(const TaskChain& chain, const Solution& solution, const Platform& platform,
                   const SimConfig& config);

} // namespace chainsched
