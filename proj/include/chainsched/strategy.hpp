#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainsched/chain.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

/// Names accepted on the command line and in harness configs.
/// fertac, twocatac, herad, otac-b, otac-l, os-r1, os-r2, os-r3.
const std::vector<std::string>& strategy_names();

bool is_strategy_name(const std::string& name);

struct StrategyOptions {
    std::uint64_t twocatac_budget = std::uint64_t(1) << 22;
};

/// Runs the named strategy. Returns nothing when the strategy is infeasible on
/// the platform (e.g. otac-l with zero little cores); throws
/// BudgetExceededError when an expansion budget runs out. The os-r* baselines
/// ignore platform limits by design.
std::optional<Solution> run_strategy(const std::string& name, const TaskChain& chain,
                                     const Platform& platform, const StrategyOptions& options = {});

} // namespace chainsched
