#include "chainsched/chain.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace chainsched {

TaskChain::TaskChain(std::string name, std::vector<Task> tasks)
    : name_(std::move(name)), tasks_(std::move(tasks)) {
    if (tasks_.empty()) throw InputError("task chain must not be empty");
    const int n = size();
    for (int i = 1; i <= n; ++i) {
        const Task& t = tasks_[static_cast<std::size_t>(i - 1)];
        if (t.id != i)
            throw InputError("task ids must be 1..n in order; got id " + std::to_string(t.id) +
                             " at position " + std::to_string(i));
        if (t.weight_big.is_infinite() || t.weight_little.is_infinite() ||
            !(Rational(0) < t.weight_big) || !(Rational(0) < t.weight_little))
            throw InputError("task " + std::to_string(i) + " must have finite positive weights");
    }

    prefix_big_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    prefix_little_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        prefix_big_[static_cast<std::size_t>(i)] =
            prefix_big_[static_cast<std::size_t>(i - 1)] + task(i).weight_big;
        prefix_little_[static_cast<std::size_t>(i)] =
            prefix_little_[static_cast<std::size_t>(i - 1)] + task(i).weight_little;
    }

    next_seq_.assign(static_cast<std::size_t>(n) + 2, n + 1);
    for (int i = n; i >= 1; --i)
        next_seq_[static_cast<std::size_t>(i)] =
            task(i).replicable ? next_seq_[static_cast<std::size_t>(i + 1)] : i;
}

Rational TaskChain::max_task_weight(CoreType v) const {
    Rational m(0);
    for (const auto& t : tasks_) m = rational_max(m, t.weight(v));
    return m;
}

Rational TaskChain::max_sequential_weight(CoreType v) const {
    Rational m(0);
    for (const auto& t : tasks_)
        if (!t.replicable) m = rational_max(m, t.weight(v));
    return m;
}

Platform::Platform(long long big_cores, long long little_cores, std::vector<Cluster> topology)
    : big(big_cores), little(little_cores), clusters(std::move(topology)) {
    if (big < 0 || little < 0) throw InputError("core counts must be non-negative");
    if (big + little < 1) throw InputError("platform needs at least one core");
    if (!clusters.empty()) {
        long long b = 0;
        long long l = 0;
        std::unordered_set<int> seen;
        for (const auto& c : clusters) {
            for (int id : c.cores)
                if (!seen.insert(id).second)
                    throw InputError("duplicate core id " + std::to_string(id) + " in topology");
            if (c.type == CoreType::Big)
                b += static_cast<long long>(c.cores.size());
            else
                l += static_cast<long long>(c.cores.size());
        }
        if (b != big || l != little)
            throw InputError("topology core totals (" + std::to_string(b) + "B," + std::to_string(l) +
                             "L) do not match platform (" + std::to_string(big) + "B," +
                             std::to_string(little) + "L)");
    }
}

} // namespace chainsched
