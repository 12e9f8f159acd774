#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

/// Period bounds driving the binary search of the common scheduling frame.
struct SearchBounds {
    Rational p_min;
    Rational p_max;
    Rational epsilon;

    /// Bounds for the two-type search: replicate everything over all cores vs
    /// the heaviest sequential task, both on big-core weights; the upper bound
    /// adds the largest little-core weight.
    static SearchBounds heterogeneous(const TaskChain& chain, const Platform& platform);

    /// Bounds restricted to a single core type with `cores` cores.
    static SearchBounds homogeneous(const TaskChain& chain, long long cores, CoreType v);
};

/// Result of building one stage: last task index and cores consumed.
struct StageResult {
    int last = 0;
    long long cores_used = 0;
};

/// A partially built stage list with its usage and worst stage weight cached,
/// so validity checks during the search are O(1).
struct PartialSolution {
    std::vector<Stage> stages;
    CoreUsage usage;
    Rational worst{0};

    bool is_valid(long long big, long long little, const Rational& target) const {
        return !stages.empty() && worst <= target && usage.fits(big, little);
    }
};

/// Largest e >= start with stage_weight(start,e,cores,v) <= target, or start
/// when even the single task does not fit. O(log n) over prefix sums.
int max_packing(const TaskChain& chain, int start, long long cores, CoreType v, const Rational& target);

/// ceil(one-core interval weight / target), exact.
long long required_cores(const TaskChain& chain, int start, int end, CoreType v, const Rational& target);

bool is_rep(const TaskChain& chain, int start, int end);

/// Largest i >= end with [start,i] fully replicable; end when [start,end] is not.
int final_rep_task(const TaskChain& chain, int start, int end);

/// Greedy single-stage construction: packs as many tasks as possible from
/// `start` under the target period with at most `cores_available` cores of
/// type `v`. May return a degenerate result (e.g. zero cores used); callers
/// decide validity against their remaining budgets.
StageResult compute_stage(const TaskChain& chain, int start, long long cores_available, CoreType v,
                          const Rational& target);

using ComputeSolutionFn = std::function<std::optional<PartialSolution>(
    const TaskChain&, int start, long long big, long long little, const Rational& target)>;

struct ScheduleStats {
    int iterations = 0;
};

/// Binary search on the target period around a strategy-specific
/// ComputeSolution. Returns the best valid solution found, or nothing if no
/// iteration produced one.
std::optional<Solution> schedule_with_bounds(const TaskChain& chain, long long big, long long little,
                                             const SearchBounds& bounds, const ComputeSolutionFn& fn,
                                             ScheduleStats* stats = nullptr);

std::optional<Solution> schedule(const TaskChain& chain, const Platform& platform,
                                 const ComputeSolutionFn& fn, ScheduleStats* stats = nullptr);

} // namespace chainsched
