#pragma once

#include <string>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

enum class PinPolicy { Loose, Guided, Packed, Distant };

PinPolicy pin_policy_from_name(const std::string& name);
std::string pin_policy_name(PinPolicy policy);

/// Placement of one stage-replica thread.
struct ThreadPin {
    enum class Kind { AnyCore, CoreSet, SingleCore };

    int stage = 0;   // 1-based stage index
    int replica = 0; // 0-based replica within the stage
    CoreType type = CoreType::Big;
    Kind kind = Kind::AnyCore;
    std::vector<int> cores; // one id for SingleCore, the full set for CoreSet
};

struct PinMap {
    PinPolicy policy = PinPolicy::Loose;
    std::vector<ThreadPin> threads;
};

/// Thread placement for a solution on a cluster topology. One thread per stage
/// replica, in stage order. loose leaves placement to the OS; guided pins each
/// thread to every core of its stage's type; packed assigns cores of each type
/// in ascending id order; distant round-robins the clusters of each type,
/// taking the first free core in each.
PinMap pin(const Solution& solution, const Platform& platform, PinPolicy policy);

} // namespace chainsched
