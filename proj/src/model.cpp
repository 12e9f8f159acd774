#include "chainsched/model.hpp"

#include <utility>

namespace chainsched {

Rational stage_weight(const TaskChain& chain, int first, int last, long long cores, CoreType v) {
    chain.check_interval(first, last);
    if (cores <= 0) return Rational::infinity();
    Rational sum = chain.interval_weight(first, last, v);
    if (!chain.all_replicable(first, last)) return sum;
    return sum / Rational(cores);
}

static void check_tiling(const TaskChain& chain, const std::vector<Stage>& stages) {
    if (stages.empty()) throw StructuralError("solution has no stages");
    int expected = 1;
    for (const auto& s : stages) {
        if (s.first != expected || s.last < s.first)
            throw StructuralError("stages do not tile the chain contiguously");
        expected = s.last + 1;
    }
    if (expected != chain.size() + 1)
        throw StructuralError("stages do not cover the whole chain");
}

Rational period(const TaskChain& chain, const std::vector<Stage>& stages) {
    check_tiling(chain, stages);
    Rational worst(0);
    for (const auto& s : stages)
        worst = rational_max(worst, stage_weight(chain, s.first, s.last, s.cores, s.type));
    return worst;
}

Rational period(const TaskChain& chain, const Solution& solution) {
    return period(chain, solution.stages);
}

Solution make_solution(const TaskChain& chain, std::vector<Stage> stages) {
    Rational p = period(chain, stages);
    return Solution{std::move(stages), p};
}

bool is_resource_valid(const std::vector<Stage>& stages, long long big, long long little) {
    long long b = 0;
    long long l = 0;
    for (const auto& s : stages) {
        if (s.type == CoreType::Big)
            b += s.cores;
        else
            l += s.cores;
    }
    return b <= big && l <= little;
}

bool is_resource_valid(const Solution& solution, const Platform& platform) {
    return is_resource_valid(solution.stages, platform.big, platform.little);
}

} // namespace chainsched
