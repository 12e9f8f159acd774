#include "chainsched/sched_core.hpp"

#include <algorithm>

namespace chainsched {

SearchBounds SearchBounds::heterogeneous(const TaskChain& chain, const Platform& platform) {
    Rational cores(platform.total());
    Rational p_min = rational_max(chain.total_weight(CoreType::Big) / cores,
                                  chain.max_sequential_weight(CoreType::Big));
    Rational p_max = p_min + chain.max_task_weight(CoreType::Little);
    return SearchBounds{p_min, p_max, Rational(1) / cores};
}

SearchBounds SearchBounds::homogeneous(const TaskChain& chain, long long cores, CoreType v) {
    Rational c(cores);
    Rational p_min = rational_max(chain.total_weight(v) / c, chain.max_sequential_weight(v));
    Rational p_max = p_min + chain.max_task_weight(v);
    return SearchBounds{p_min, p_max, Rational(1) / c};
}

// Largest i in [lo,hi] with prefix-sum weight from `start` at most `limit`,
// or lo-1 when none. Interval sums are monotone in i.
static int last_fitting(const TaskChain& chain, int start, int lo, int hi, CoreType v,
                        const Rational& limit) {
    if (lo > hi || chain.interval_weight(start, lo, v) > limit) return lo - 1;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (chain.interval_weight(start, mid, v) <= limit)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

int max_packing(const TaskChain& chain, int start, long long cores, CoreType v,
                const Rational& target) {
    chain.check_interval(start, start);
    if (cores <= 0) return start; // every weight is infinite; forced minimum
    const int n = chain.size();
    const int rep_end = std::min(n, chain.replicable_reach(start));
    // Intervals past rep_end contain a sequential task: full one-core weight.
    const int seq_lo = std::max(start, rep_end + 1);
    if (seq_lo <= n) {
        int best = last_fitting(chain, start, seq_lo, n, v, target);
        if (best >= seq_lo) return best;
    }
    // Fully replicable range: weight is the sum divided by the core count.
    if (rep_end >= start) {
        int best = last_fitting(chain, start, start, rep_end, v, target * Rational(cores));
        if (best >= start) return best;
    }
    return start;
}

long long required_cores(const TaskChain& chain, int start, int end, CoreType v,
                         const Rational& target) {
    return ceil_div(chain.interval_weight(start, end, v), target);
}

bool is_rep(const TaskChain& chain, int start, int end) { return chain.all_replicable(start, end); }

int final_rep_task(const TaskChain& chain, int start, int end) {
    chain.check_interval(start, end);
    return std::max(end, std::min(chain.size(), chain.replicable_reach(start)));
}

StageResult compute_stage(const TaskChain& chain, int start, long long cores_available, CoreType v,
                          const Rational& target) {
    const int n = chain.size();
    int e = max_packing(chain, start, 1, v, target);
    long long u = required_cores(chain, start, e, v, target);
    if (e != n && is_rep(chain, start, e)) {
        e = final_rep_task(chain, start, e);
        u = required_cores(chain, start, e, v, target);
        if (u > cores_available) {
            // Not enough cores for the extended stage; shrink to what fits and
            // charge only the cores the shrunk interval needs.
            e = max_packing(chain, start, cores_available, v, target);
            u = required_cores(chain, start, e, v, target);
        } else if (e != n && u > 1) {
            // A sequential task follows; moving this stage's tail there may
            // save a core. Skipped at u == 1: zero cores is never valid. The
            // shorter stage is only adopted when it actually meets the target
            // (max_packing may have been forced down to a lone oversized task).
            int f = max_packing(chain, start, u - 1, v, target);
            if (stage_weight(chain, start, f, u - 1, v) <= target &&
                required_cores(chain, f + 1, e + 1, v, target) == 1) {
                e = f;
                u = u - 1;
            }
        }
    }
    return StageResult{e, u};
}

std::optional<Solution> schedule_with_bounds(const TaskChain& chain, long long big, long long little,
                                             const SearchBounds& bounds, const ComputeSolutionFn& fn,
                                             ScheduleStats* stats) {
    Rational p_min = bounds.p_min;
    Rational p_max = bounds.p_max;
    std::optional<PartialSolution> best;
    int iterations = 0;
    while (bounds.epsilon <= p_max - p_min) {
        ++iterations;
        Rational p_mid = (p_max + p_min) / Rational(2);
        std::optional<PartialSolution> candidate = fn(chain, 1, big, little, p_mid);
        if (candidate && candidate->is_valid(big, little, p_mid)) {
            p_max = candidate->worst; // can only decrease the target from here
            best = std::move(candidate);
        } else {
            p_min = p_mid;
        }
    }
    if (stats) stats->iterations = iterations;
    if (!best) return std::nullopt;
    return make_solution(chain, std::move(best->stages));
}

std::optional<Solution> schedule(const TaskChain& chain, const Platform& platform,
                                 const ComputeSolutionFn& fn, ScheduleStats* stats) {
    return schedule_with_bounds(chain, platform.big, platform.little,
                                SearchBounds::heterogeneous(chain, platform), fn, stats);
}

} // namespace chainsched
