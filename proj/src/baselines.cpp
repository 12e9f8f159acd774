#include "chainsched/baselines.hpp"

namespace chainsched {

std::optional<Solution> otac_schedule(const TaskChain& chain, const Platform& platform, CoreType v,
                                      ScheduleStats* stats) {
    const long long cores = platform.count(v);
    if (cores < 1) return std::nullopt;

    auto compute = [v](const TaskChain& c, int start, long long big, long long little,
                       const Rational& target) -> std::optional<PartialSolution> {
        const long long total = v == CoreType::Big ? big : little;
        long long left = total;
        const int n = c.size();
        PartialSolution out;
        int s = start;
        while (s <= n) {
            StageResult r = compute_stage(c, s, left, v, target);
            if (r.cores_used < 1 || r.cores_used > left ||
                stage_weight(c, s, r.last, r.cores_used, v) > target)
                return std::nullopt;
            out.stages.push_back(Stage{s, r.last, r.cores_used, v});
            out.worst = rational_max(out.worst, stage_weight(c, s, r.last, r.cores_used, v));
            left -= r.cores_used;
            s = r.last + 1;
        }
        if (v == CoreType::Big)
            out.usage.big = total - left;
        else
            out.usage.little = total - left;
        return out;
    };

    long long big = v == CoreType::Big ? cores : 0;
    long long little = v == CoreType::Little ? cores : 0;
    return schedule_with_bounds(chain, big, little, SearchBounds::homogeneous(chain, cores, v),
                                compute, stats);
}

Solution os_style_decomposition(const TaskChain& chain, int replication_factor) {
    if (replication_factor < 1)
        throw InputError("replication factor must be at least 1");
    std::vector<Stage> stages;
    stages.reserve(static_cast<std::size_t>(chain.size()));
    for (int i = 1; i <= chain.size(); ++i) {
        long long r = chain.task(i).replicable ? replication_factor : 1;
        stages.push_back(Stage{i, i, r, CoreType::Big});
    }
    return make_solution(chain, std::move(stages));
}

long long thread_count(const Solution& solution) {
    long long t = 0;
    for (const auto& s : solution.stages) t += s.cores;
    return t;
}

} // namespace chainsched
