#pragma once

#include <optional>

#include "chainsched/sched_core.hpp"

namespace chainsched {

/// Greedy little-cores-first stage construction: each stage is attempted with
/// the remaining little cores and falls back to big cores only when that
/// attempt cannot meet the target period.
std::optional<PartialSolution> fertac_compute_solution(const TaskChain& chain, int start,
                                                       long long big, long long little,
                                                       const Rational& target);

std::optional<Solution> fertac_schedule(const TaskChain& chain, const Platform& platform,
                                        ScheduleStats* stats = nullptr);

} // namespace chainsched
