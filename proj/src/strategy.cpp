#include "chainsched/strategy.hpp"

#include <algorithm>

#include "chainsched/baselines.hpp"
#include "chainsched/fertac.hpp"
#include "chainsched/herad.hpp"
#include "chainsched/twocatac.hpp"

namespace chainsched {

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names{"fertac", "twocatac", "herad", "otac-b",
                                                "otac-l", "os-r1",    "os-r2", "os-r3"};
    return names;
}

bool is_strategy_name(const std::string& name) {
    const auto& names = strategy_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<Solution> run_strategy(const std::string& name, const TaskChain& chain,
                                     const Platform& platform, const StrategyOptions& options) {
    if (name == "fertac") return fertac_schedule(chain, platform);
    if (name == "twocatac") {
        TwocatacOptions o;
        o.max_expansions = options.twocatac_budget;
        return twocatac_schedule(chain, platform, o);
    }
    if (name == "herad") return herad_schedule(chain, platform);
    if (name == "otac-b") return otac_schedule(chain, platform, CoreType::Big);
    if (name == "otac-l") return otac_schedule(chain, platform, CoreType::Little);
    if (name == "os-r1") return os_style_decomposition(chain, 1);
    if (name == "os-r2") return os_style_decomposition(chain, 2);
    if (name == "os-r3") return os_style_decomposition(chain, 3);
    throw InputError("unknown strategy: " + name);
}

} // namespace chainsched
