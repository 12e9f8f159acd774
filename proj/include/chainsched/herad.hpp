#pragma once

#include <utility>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

/// One dynamic-programming cell: the best period for a task prefix under a
/// core budget, plus enough bookkeeping to walk the solution back out.
struct Cell {
    Rational p_best = Rational::infinity(); // +infinity marks an unreachable cell
    std::pair<long long, long long> prev{0, 0}; // budgets locating the predecessor cell
    CoreUsage acc;                              // cores accumulated through this cell
    CoreType core_type = CoreType::Little;      // type of the cell's last stage
    int start = 0;                              // first task of the cell's last stage
};

/// Cells indexed [prefix 0..n][big 0..b][little 0..l]; row 0 is the empty
/// prefix with period zero.
class SolutionMatrix {
public:
    SolutionMatrix(int tasks, long long big, long long little);

    Cell& at(int prefix, long long big, long long little) {
        return cells_[index(prefix, big, little)];
    }
    const Cell& at(int prefix, long long big, long long little) const {
        return cells_[index(prefix, big, little)];
    }

    int tasks() const { return tasks_; }
    long long big() const { return big_; }
    long long little() const { return little_; }

private:
    std::size_t index(int prefix, long long big, long long little) const;

    int tasks_;
    long long big_;
    long long little_;
    std::vector<Cell> cells_;
};

/// Returns the candidate cell when it improves on the current one: a strictly
/// smaller period, a tie that trades big cores for little ones, or a tie that
/// uses no more cores of either type; otherwise the current cell.
const Cell& compare_cells(const Cell& current, const Cell& candidate);

/// Fills row `prefix_end` with single-stage solutions for every core budget,
/// solving ties in favor of little cores. Sequential stages account exactly
/// one core regardless of how many are available.
void single_stage_solution(int prefix_end, SolutionMatrix& matrix, const TaskChain& chain,
                           long long big, long long little);

/// Recomputes one cell from its single-stage seed, the two one-core-less
/// neighbors, and every split point and core count, in the fixed order that
/// makes tie-breaking deterministic.
void recompute_cell(int prefix_end, SolutionMatrix& matrix, const TaskChain& chain, long long big,
                    long long little);

/// Walks back from the final cell, prepending stages with core counts taken as
/// accumulated-usage deltas.
Solution extract_solution(const SolutionMatrix& matrix, const TaskChain& chain, long long big,
                          long long little);

/// Fuses adjacent fully replicable stages of the same core type, summing their
/// core counts. Never increases the period.
Solution merge_replicable_stages(const TaskChain& chain, const Solution& solution);

/// Fills the whole matrix. Exposed so properties of the table itself (e.g.
/// monotonicity in the core budgets) can be checked directly.
SolutionMatrix herad_fill_matrix(const TaskChain& chain, long long big, long long little);

/// Minimum-period schedule over both core types, preferring little cores on
/// ties, with the stage-merge post-pass applied.
Solution herad_schedule(const TaskChain& chain, const Platform& platform);

} // namespace chainsched
