#include "chainsched/pinning.hpp"

#include <algorithm>

namespace chainsched {

PinPolicy pin_policy_from_name(const std::string& name) {
    if (name == "loose") return PinPolicy::Loose;
    if (name == "guided") return PinPolicy::Guided;
    if (name == "packed") return PinPolicy::Packed;
    if (name == "distant") return PinPolicy::Distant;
    throw InputError("unknown pin policy: " + name);
}

std::string pin_policy_name(PinPolicy policy) {
    switch (policy) {
    case PinPolicy::Loose: return "loose";
    case PinPolicy::Guided: return "guided";
    case PinPolicy::Packed: return "packed";
    case PinPolicy::Distant: return "distant";
    }
    return "?";
}

namespace {

// Hands out core ids of one type: ascending over all ids (packed) or
// round-robin over that type's clusters, first free core in each (distant).
class CoreAllocator {
public:
    CoreAllocator(const Platform& platform, CoreType type, bool round_robin)
        : round_robin_(round_robin) {
        for (const auto& cluster : platform.clusters) {
            if (cluster.type != type) continue;
            clusters_.push_back(cluster.cores);
            std::sort(clusters_.back().begin(), clusters_.back().end());
        }
        taken_.resize(clusters_.size(), 0);
    }

    int take(CoreType type) {
        if (round_robin_) {
            const std::size_t n = clusters_.size();
            for (std::size_t probe = 0; probe < n; ++probe) {
                std::size_t c = (next_cluster_ + probe) % n;
                if (taken_[c] < clusters_[c].size()) {
                    next_cluster_ = (c + 1) % n;
                    return clusters_[c][taken_[c]++];
                }
            }
        } else {
            // Ascending ids across the whole type; cluster ids are contiguous
            // so walking clusters in listed order preserves that.
            std::vector<std::pair<int, std::size_t>> all;
            for (std::size_t c = 0; c < clusters_.size(); ++c)
                for (std::size_t i = taken_[c]; i < clusters_[c].size(); ++i)
                    all.emplace_back(clusters_[c][i], c);
            if (!all.empty()) {
                auto it = std::min_element(all.begin(), all.end());
                ++taken_[it->second];
                return it->first;
            }
        }
        throw CapacityError(std::string("not enough ") +
                            (type == CoreType::Big ? "big" : "little") + " cores for the pin map");
    }

private:
    bool round_robin_;
    std::vector<std::vector<int>> clusters_;
    std::vector<std::size_t> taken_;
    std::size_t next_cluster_ = 0;
};

} // namespace

PinMap pin(const Solution& solution, const Platform& platform, PinPolicy policy) {
    PinMap map;
    map.policy = policy;
    const bool needs_topology = policy != PinPolicy::Loose;
    if (needs_topology && !platform.has_topology())
        throw InputError("pin policy '" + pin_policy_name(policy) + "' needs a cluster topology");

    std::vector<int> type_cores[2]; // all ids per type, for the guided sets
    if (needs_topology) {
        for (const auto& cluster : platform.clusters) {
            auto& ids = type_cores[cluster.type == CoreType::Big ? 0 : 1];
            ids.insert(ids.end(), cluster.cores.begin(), cluster.cores.end());
        }
        std::sort(type_cores[0].begin(), type_cores[0].end());
        std::sort(type_cores[1].begin(), type_cores[1].end());
    }

    CoreAllocator big_alloc(platform, CoreType::Big, policy == PinPolicy::Distant);
    CoreAllocator little_alloc(platform, CoreType::Little, policy == PinPolicy::Distant);

    for (std::size_t s = 0; s < solution.stages.size(); ++s) {
        const Stage& stage = solution.stages[s];
        for (long long replica = 0; replica < stage.cores; ++replica) {
            ThreadPin t;
            t.stage = static_cast<int>(s + 1);
            t.replica = static_cast<int>(replica);
            t.type = stage.type;
            switch (policy) {
            case PinPolicy::Loose:
                t.kind = ThreadPin::Kind::AnyCore;
                break;
            case PinPolicy::Guided:
                t.kind = ThreadPin::Kind::CoreSet;
                t.cores = type_cores[stage.type == CoreType::Big ? 0 : 1];
                if (t.cores.empty())
                    throw CapacityError("no cores of the stage's type in the topology");
                break;
            case PinPolicy::Packed:
            case PinPolicy::Distant: {
                auto& alloc = stage.type == CoreType::Big ? big_alloc : little_alloc;
                t.kind = ThreadPin::Kind::SingleCore;
                t.cores = {alloc.take(stage.type)};
                break;
            }
            }
            map.threads.push_back(std::move(t));
        }
    }
    return map;
}

} // namespace chainsched
