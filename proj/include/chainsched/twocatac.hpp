#pragma once

#include <cstdint>
#include <optional>

#include "chainsched/sched_core.hpp"

namespace chainsched {

struct TwocatacOptions {
    /// Abort the whole run past this many ComputeSolution expansions instead
    /// of letting the worst-case exponential recursion hang.
    std::uint64_t max_expansions = std::uint64_t(1) << 22;
};

/// Picks between the big-first and little-first candidates for the same start
/// index: the only valid one, then the one trading big cores for little ones,
/// then the one with fewer cores in total; final ties go to the little side.
std::optional<PartialSolution> choose_best_solution(std::optional<PartialSolution> sol_big,
                                                    std::optional<PartialSolution> sol_little,
                                                    long long big, long long little,
                                                    const Rational& target);

/// Two-choice stage construction: both core types are tried at every stage
/// boundary and full candidate solutions are compared. Throws
/// BudgetExceededError when the expansion budget runs out.
std::optional<PartialSolution> twocatac_compute_solution(const TaskChain& chain, int start,
                                                         long long big, long long little,
                                                         const Rational& target,
                                                         std::uint64_t* expansions_left);

std::optional<Solution> twocatac_schedule(const TaskChain& chain, const Platform& platform,
                                          const TwocatacOptions& options = {},
                                          ScheduleStats* stats = nullptr);

} // namespace chainsched
