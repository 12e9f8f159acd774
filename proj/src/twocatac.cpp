#include "chainsched/twocatac.hpp"

#include <utility>

namespace chainsched {

std::optional<PartialSolution> choose_best_solution(std::optional<PartialSolution> sol_big,
                                                    std::optional<PartialSolution> sol_little,
                                                    long long big, long long little,
                                                    const Rational& target) {
    const bool big_ok = sol_big && sol_big->is_valid(big, little, target);
    const bool little_ok = sol_little && sol_little->is_valid(big, little, target);
    if (big_ok && little_ok) {
        const CoreUsage& ub = sol_big->usage;
        const CoreUsage& ul = sol_little->usage;
        if (ub.little > ul.little && ub.big < ul.big) return sol_big;
        if (ub.little < ul.little && ub.big > ul.big) return sol_little;
        if (ub.total() < ul.total()) return sol_big;
        return sol_little;
    }
    if (big_ok) return sol_big;
    if (little_ok) return sol_little;
    return std::nullopt;
}

std::optional<PartialSolution> twocatac_compute_solution(const TaskChain& chain, int start,
                                                         long long big, long long little,
                                                         const Rational& target,
                                                         std::uint64_t* expansions_left) {
    if (expansions_left) {
        if (*expansions_left == 0)
            throw BudgetExceededError("twocatac: expansion budget exhausted");
        --*expansions_left;
    }
    const int n = chain.size();
    std::optional<PartialSolution> candidate[2];
    for (CoreType v : {CoreType::Big, CoreType::Little}) {
        auto& out = candidate[v == CoreType::Big ? 0 : 1];
        const long long budget = v == CoreType::Big ? big : little;
        StageResult r = compute_stage(chain, start, budget, v, target);
        Rational w = stage_weight(chain, start, r.last, r.cores_used, v);
        if (r.cores_used < 1 || r.cores_used > budget || w > target) {
            out = std::nullopt;
            continue;
        }
        Stage stage{start, r.last, r.cores_used, v};
        if (r.last == n) {
            PartialSolution p;
            p.stages.push_back(stage);
            p.worst = w;
            (v == CoreType::Big ? p.usage.big : p.usage.little) = r.cores_used;
            out = std::move(p);
            continue;
        }
        long long next_big = v == CoreType::Big ? big - r.cores_used : big;
        long long next_little = v == CoreType::Little ? little - r.cores_used : little;
        auto tail = twocatac_compute_solution(chain, r.last + 1, next_big, next_little, target,
                                              expansions_left);
        if (!tail || !tail->is_valid(next_big, next_little, target)) {
            out = std::nullopt;
            continue;
        }
        // Usage is accumulated while combining so comparisons stay O(1).
        PartialSolution p;
        p.stages.reserve(tail->stages.size() + 1);
        p.stages.push_back(stage);
        p.stages.insert(p.stages.end(), tail->stages.begin(), tail->stages.end());
        p.usage = tail->usage;
        (v == CoreType::Big ? p.usage.big : p.usage.little) += r.cores_used;
        p.worst = rational_max(w, tail->worst);
        out = std::move(p);
    }
    return choose_best_solution(std::move(candidate[0]), std::move(candidate[1]), big, little,
                                target);
}

std::optional<Solution> twocatac_schedule(const TaskChain& chain, const Platform& platform,
                                          const TwocatacOptions& options, ScheduleStats* stats) {
    std::uint64_t budget = options.max_expansions;
    auto fn = [&budget](const TaskChain& c, int start, long long b, long long l,
                        const Rational& target) {
        return twocatac_compute_solution(c, start, b, l, target, &budget);
    };
    return schedule(chain, platform, fn, stats);
}

} // namespace chainsched
