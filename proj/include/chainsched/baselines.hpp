#pragma once

#include <optional>

#include "chainsched/sched_core.hpp"

namespace chainsched {

/// Homogeneous single-type scheduling: the common frame restricted to one core
/// type with that type's weights driving the search bounds. Returns nothing
/// when the selected type has no cores.
std::optional<Solution> otac_schedule(const TaskChain& chain, const Platform& platform, CoreType v,
                                      ScheduleStats* stats = nullptr);

/// OS-style thread-per-task decomposition: one stage per task, replicable
/// stages get `replication_factor` cores. The result deliberately ignores
/// platform limits (the OS oversubscribes); stage types are nominally Big.
Solution os_style_decomposition(const TaskChain& chain, int replication_factor);

/// Number of runtime threads a decomposition spawns: one per stage replica.
long long thread_count(const Solution& solution);

} // namespace chainsched
