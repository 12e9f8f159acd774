#include "chainsched/fertac.hpp"

namespace chainsched {

namespace {

bool stage_fits(const TaskChain& chain, int start, const StageResult& r, CoreType v, long long big,
                long long little, const Rational& target) {
    if (r.cores_used < 1) return false;
    long long budget = v == CoreType::Big ? big : little;
    if (r.cores_used > budget) return false;
    return stage_weight(chain, start, r.last, r.cores_used, v) <= target;
}

} // namespace

// The recursion of the two-attempt scheme is tail-positioned, so it is run as
// a plain loop over stages.
std::optional<PartialSolution> fertac_compute_solution(const TaskChain& chain, int start,
                                                       long long big, long long little,
                                                       const Rational& target) {
    const int n = chain.size();
    PartialSolution out;
    int s = start;
    while (s <= n) {
        StageResult r = compute_stage(chain, s, little, CoreType::Little, target);
        CoreType v = CoreType::Little;
        if (!stage_fits(chain, s, r, v, big, little, target)) {
            r = compute_stage(chain, s, big, CoreType::Big, target);
            v = CoreType::Big;
            if (!stage_fits(chain, s, r, v, big, little, target)) return std::nullopt;
        }
        out.stages.push_back(Stage{s, r.last, r.cores_used, v});
        out.worst = rational_max(out.worst, stage_weight(chain, s, r.last, r.cores_used, v));
        if (v == CoreType::Big) {
            out.usage.big += r.cores_used;
            big -= r.cores_used;
        } else {
            out.usage.little += r.cores_used;
            little -= r.cores_used;
        }
        s = r.last + 1;
    }
    return out;
}

std::optional<Solution> fertac_schedule(const TaskChain& chain, const Platform& platform,
                                        ScheduleStats* stats) {
    return schedule(chain, platform, fertac_compute_solution, stats);
}

} // namespace chainsched
