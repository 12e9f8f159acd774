#include "chainsched/sim.hpp"

#include <algorithm>
#include <numeric>

namespace chainsched {

std::vector<long long> buffer_plan(const Solution& solution) {
    std::vector<long long> plan;
    if (solution.stages.size() < 2) return plan;
    plan.reserve(solution.stages.size() - 1);
    for (std::size_t i = 0; i + 1 < solution.stages.size(); ++i) {
        long long m = solution.stages[i].cores;
        long long n = solution.stages[i + 1].cores;
        plan.push_back(std::lcm(m, n));
    }
    return plan;
}

SimReport simulate(const TaskChain& chain, const Solution& solution, const Platform& platform,
                   const SimConfig& config) {
    if (!is_resource_valid(solution, platform))
        throw InputError("simulate: solution does not fit the platform");
    if (config.warmup_streams < 0 || config.streams <= config.warmup_streams)
        throw InputError("simulate: needs streams > warmup_streams >= 0");
    if (config.streams < config.warmup_streams + 2)
        throw InputError("simulate: needs at least two post-warmup completions");

    const auto k = solution.stages.size();
    const auto S = static_cast<std::size_t>(config.streams);

    std::vector<long long> buffers = buffer_plan(solution);
    if (config.buffers_per_link >= 0)
        std::fill(buffers.begin(), buffers.end(), config.buffers_per_link);
    for (std::size_t i = 0; i < buffers.size(); ++i)
        if (buffers[i] < 1)
            throw DeadlockError(static_cast<int>(i),
                                "simulate: link " + std::to_string(i) + " has no buffers");

    std::vector<Rational> weight(k); // one-core weight; replication divides throughput only
    for (std::size_t i = 0; i < k; ++i) {
        const Stage& s = solution.stages[i];
        weight[i] = stage_weight(chain, s.first, s.last, 1, s.type);
    }

    std::vector<std::vector<Rational>> start(k, std::vector<Rational>(S, Rational(0)));
    std::vector<std::vector<Rational>> finish(k, std::vector<Rational>(S, Rational(0)));
    for (std::size_t t = 0; t < S; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            Rational ready(0);
            if (i > 0) ready = finish[i - 1][t]; // input slot filled by the upstream stage
            const auto r = static_cast<std::size_t>(solution.stages[i].cores);
            if (t >= r) ready = rational_max(ready, finish[i][t - r]); // replica busy
            if (i + 1 < k) {
                const auto b = static_cast<std::size_t>(buffers[i]);
                // Output slot is reused once the consumer has pulled stream t - b.
                if (t >= b) ready = rational_max(ready, start[i + 1][t - b]);
            }
            start[i][t] = ready;
            finish[i][t] = ready + weight[i];
        }
    }

    SimReport report;
    report.completions = finish[k - 1];
    report.ordering_preserved =
        std::is_sorted(report.completions.begin(), report.completions.end(),
                       [](const Rational& a, const Rational& b) { return a < b; });
    report.completion_order.resize(S);
    std::iota(report.completion_order.begin(), report.completion_order.end(), 0);
    std::stable_sort(report.completion_order.begin(), report.completion_order.end(),
                     [&](long long a, long long b) {
                         const auto& ca = report.completions[static_cast<std::size_t>(a)];
                         const auto& cb = report.completions[static_cast<std::size_t>(b)];
                         if (ca < cb) return true;
                         if (cb < ca) return false;
                         return a < b;
                     });

    const auto w0 = static_cast<std::size_t>(config.warmup_streams);
    report.measured_period = (report.completions[S - 1] - report.completions[w0]) /
                             Rational(static_cast<long long>(S - 1 - w0));

    report.per_stage_busy.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rational span = finish[i][S - 1] - start[i][0];
        Rational busy = weight[i] * Rational(static_cast<long long>(S));
        double denom = span.to_double() * static_cast<double>(solution.stages[i].cores);
        report.per_stage_busy[i] = denom > 0 ? busy.to_double() / denom : 1.0;
    }
    return report;
}

} // namespace chainsched
