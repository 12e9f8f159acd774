#include "chainsched/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace chainsched {

TaskChain generate(const GenSpec& spec) {
    if (spec.n_tasks < 1) throw InputError("generator needs at least one task");
    if (spec.weight_min < 1 || spec.weight_max < spec.weight_min)
        throw InputError("generator weight range is empty or non-positive");
    if (spec.slowdown_min < 1.0 || spec.slowdown_max < spec.slowdown_min)
        throw InputError("generator slowdown range is empty or below 1");
    if (spec.stateless_ratio < 0.0 || spec.stateless_ratio > 1.0)
        throw InputError("stateless ratio must be in [0,1]");

    SplitMix64 rng(spec.seed);
    const int n = spec.n_tasks;
    std::vector<Task> tasks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto wb = static_cast<long long>(rng.uniform_int(
            static_cast<std::uint64_t>(spec.weight_min), static_cast<std::uint64_t>(spec.weight_max)));
        const double slowdown =
            spec.slowdown_min + rng.uniform01() * (spec.slowdown_max - spec.slowdown_min);
        const auto wl = static_cast<long long>(std::ceil(static_cast<double>(wb) * slowdown));
        tasks[static_cast<std::size_t>(i)] = Task{i + 1, Rational(wb), Rational(wl), false};
    }

    // Exactly round(n * SR) replicable tasks at positions drawn without
    // replacement (partial Fisher-Yates).
    const auto rep_count =
        static_cast<int>(std::llround(static_cast<double>(n) * spec.stateless_ratio));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < rep_count; ++i) {
        const auto j = static_cast<int>(
            rng.uniform_int(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(n - 1)));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
        tasks[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].replicable = true;
    }

    std::string name = "synth-n" + std::to_string(n) + "-seed" + std::to_string(spec.seed);
    return TaskChain(std::move(name), std::move(tasks));
}

} // namespace chainsched
