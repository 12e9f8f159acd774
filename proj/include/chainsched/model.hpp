#pragma once

#include <vector>

#include "chainsched/chain.hpp"

namespace chainsched {

/// Weight of the stage [first,last] run on `cores` cores of type `v`.
///
/// Intervals containing a sequential task keep their full one-core weight for
/// any core count; fully replicable intervals divide it by the core count;
/// zero cores yields +infinity so degenerate allocations can be probed safely.
Rational stage_weight(const TaskChain& chain, int first, int last, long long cores, CoreType v);

/// Period of a stage list: the greatest stage weight. Throws StructuralError
/// unless the stages tile 1..n contiguously.
Rational period(const TaskChain& chain, const std::vector<Stage>& stages);
Rational period(const TaskChain& chain, const Solution& solution);

/// Builds a Solution with its period cached, validating the tiling.
Solution make_solution(const TaskChain& chain, std::vector<Stage> stages);

bool is_resource_valid(const std::vector<Stage>& stages, long long big, long long little);
bool is_resource_valid(const Solution& solution, const Platform& platform);

} // namespace chainsched
