#include "chainsched/herad.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace chainsched {

SolutionMatrix::SolutionMatrix(int tasks, long long big, long long little)
    : tasks_(tasks), big_(big), little_(little),
      cells_(static_cast<std::size_t>(tasks + 1) * static_cast<std::size_t>(big + 1) *
             static_cast<std::size_t>(little + 1)) {
    // Row 0 is the empty prefix: period 0 for every budget, nothing accumulated.
    for (long long b = 0; b <= big_; ++b)
        for (long long l = 0; l <= little_; ++l) at(0, b, l).p_best = Rational(0);
}

std::size_t SolutionMatrix::index(int prefix, long long big, long long little) const {
    return (static_cast<std::size_t>(prefix) * static_cast<std::size_t>(big_ + 1) +
            static_cast<std::size_t>(big)) *
               static_cast<std::size_t>(little_ + 1) +
           static_cast<std::size_t>(little);
}

const Cell& compare_cells(const Cell& current, const Cell& candidate) {
    const auto& c = current.acc;
    const auto& n = candidate.acc;
    if (current.p_best > candidate.p_best) return candidate;
    if (current.p_best == candidate.p_best) {
        if (c.little < n.little && c.big > n.big) return candidate;
        if (c.little >= n.little && c.big >= n.big) return candidate;
    }
    return current;
}

void single_stage_solution(int prefix_end, SolutionMatrix& matrix, const TaskChain& chain,
                           long long big, long long little) {
    const bool rep = chain.all_replicable(1, prefix_end);
    for (long long r_l = 1; r_l <= little; ++r_l) {
        Cell& cell = matrix.at(prefix_end, 0, r_l);
        cell.p_best = stage_weight(chain, 1, prefix_end, r_l, CoreType::Little);
        cell.acc = CoreUsage{0, rep ? r_l : 1};
        cell.core_type = CoreType::Little;
        cell.start = 1;
    }
    for (long long r_b = 1; r_b <= big; ++r_b) {
        const Rational w_b = stage_weight(chain, 1, prefix_end, r_b, CoreType::Big);
        const long long u_b = rep ? r_b : 1;
        for (long long r_l = 0; r_l <= little; ++r_l) {
            const Cell& little_cell = matrix.at(prefix_end, 0, r_l);
            Cell& cell = matrix.at(prefix_end, r_b, r_l);
            if (w_b < little_cell.p_best) {
                cell.p_best = w_b;
                cell.acc = CoreUsage{u_b, 0};
                cell.core_type = CoreType::Big;
            } else {
                cell.p_best = little_cell.p_best;
                cell.acc = little_cell.acc;
                cell.core_type = little_cell.core_type;
            }
            cell.start = 1;
        }
    }
}

void recompute_cell(int prefix_end, SolutionMatrix& matrix, const TaskChain& chain, long long big,
                    long long little) {
    Cell best = matrix.at(prefix_end, big, little);
    if (little > 0) best = compare_cells(best, matrix.at(prefix_end, big, little - 1));
    if (big > 0) best = compare_cells(best, matrix.at(prefix_end, big - 1, little));

    for (int i = prefix_end; i >= 1; --i) {
        const bool rep = chain.all_replicable(i, prefix_end);
        // A sequential stage cannot profit from extra cores: probe u = 1 only.
        const long long max_b = rep ? big : std::min<long long>(big, 1);
        for (long long u = 1; u <= max_b; ++u) {
            const Cell& prefix = matrix.at(i - 1, big - u, little);
            Cell cand;
            cand.p_best = rational_max(prefix.p_best,
                                       stage_weight(chain, i, prefix_end, u, CoreType::Big));
            cand.acc = CoreUsage{prefix.acc.big + (rep ? u : 1), prefix.acc.little};
            cand.prev = {big - u, prefix.acc.little};
            cand.core_type = CoreType::Big;
            cand.start = i;
            best = compare_cells(best, cand);
        }
        const long long max_l = rep ? little : std::min<long long>(little, 1);
        for (long long u = 1; u <= max_l; ++u) {
            const Cell& prefix = matrix.at(i - 1, big, little - u);
            Cell cand;
            cand.p_best = rational_max(prefix.p_best,
                                       stage_weight(chain, i, prefix_end, u, CoreType::Little));
            cand.acc = CoreUsage{prefix.acc.big, prefix.acc.little + (rep ? u : 1)};
            cand.prev = {prefix.acc.big, little - u};
            cand.core_type = CoreType::Little;
            cand.start = i;
            best = compare_cells(best, cand);
        }
    }
    matrix.at(prefix_end, big, little) = best;
}

SolutionMatrix herad_fill_matrix(const TaskChain& chain, long long big, long long little) {
    if (big + little < 1) throw InputError("herad needs at least one core");
    SolutionMatrix matrix(chain.size(), big, little);
    single_stage_solution(1, matrix, chain, big, little);
    for (int e = 2; e <= chain.size(); ++e) {
        single_stage_solution(e, matrix, chain, big, little);
        for (long long u_b = 0; u_b <= big; ++u_b)
            for (long long u_l = 0; u_l <= little; ++u_l)
                if (u_b != 0 || u_l != 0) recompute_cell(e, matrix, chain, u_b, u_l);
    }
    return matrix;
}

Solution extract_solution(const SolutionMatrix& matrix, const TaskChain& chain, long long big,
                          long long little) {
    if (matrix.at(chain.size(), big, little).p_best.is_infinite())
        throw StructuralError("no feasible schedule recorded in the solution matrix");
    std::deque<Stage> stages;
    int e = chain.size();
    long long r_b = big;
    long long r_l = little;
    while (e >= 1) {
        const Cell& cell = matrix.at(e, r_b, r_l);
        const int s = cell.start;
        long long u_b = cell.acc.big;
        long long u_l = cell.acc.little;
        if (s > 1) {
            const CoreUsage& before = matrix.at(s - 1, cell.prev.first, cell.prev.second).acc;
            u_b -= before.big;
            u_l -= before.little;
        }
        const long long r = cell.core_type == CoreType::Big ? u_b : u_l;
        stages.push_front(Stage{s, e, r, cell.core_type});
        e = s - 1;
        r_b = cell.prev.first;
        r_l = cell.prev.second;
    }
    return make_solution(chain, std::vector<Stage>(stages.begin(), stages.end()));
}

Solution merge_replicable_stages(const TaskChain& chain, const Solution& solution) {
    std::vector<Stage> merged;
    merged.reserve(solution.stages.size());
    for (const auto& stage : solution.stages) {
        if (!merged.empty()) {
            Stage& prev = merged.back();
            if (prev.type == stage.type && chain.all_replicable(prev.first, stage.last)) {
                prev.last = stage.last;
                prev.cores += stage.cores;
                continue;
            }
        }
        merged.push_back(stage);
    }
    return make_solution(chain, std::move(merged));
}

Solution herad_schedule(const TaskChain& chain, const Platform& platform) {
    SolutionMatrix matrix = herad_fill_matrix(chain, platform.big, platform.little);
    Solution raw = extract_solution(matrix, chain, platform.big, platform.little);
    return merge_replicable_stages(chain, raw);
}

} // namespace chainsched
