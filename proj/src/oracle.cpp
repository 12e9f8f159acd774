#include "chainsched/oracle.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chainsched {

namespace {

struct Searcher {
    const TaskChain& chain;
    const OracleOptions& opts;
    OracleResult best;
    std::vector<Stage> current;

    explicit Searcher(const TaskChain& c, const OracleOptions& o) : chain(c), opts(o) {
        current.reserve(static_cast<std::size_t>(c.size()));
    }

    void record(const Rational& worst) {
        if (worst > best.min_period) return;
        if (worst < best.min_period) {
            best.min_period = worst;
            best.witnesses.clear();
            best.witness_count = 0;
            best.min_big_used = -1;
            best.min_total_used = -1;
        }
        CoreUsage usage;
        for (const auto& s : current)
            (s.type == CoreType::Big ? usage.big : usage.little) += s.cores;
        if (best.min_big_used < 0 || usage.big < best.min_big_used) best.min_big_used = usage.big;
        if (best.min_total_used < 0 || usage.total() < best.min_total_used)
            best.min_total_used = usage.total();
        ++best.witness_count;
        if (opts.keep_witnesses && best.witnesses.size() < opts.max_stored_witnesses)
            best.witnesses.push_back(Solution{current, worst});
    }

    void place_stage(int start, int end, long long b_left, long long l_left, const Rational& worst) {
        const bool rep = chain.all_replicable(start, end);
        const CoreType order[2] = {opts.reverse ? CoreType::Little : CoreType::Big,
                                   opts.reverse ? CoreType::Big : CoreType::Little};
        for (CoreType v : order) {
            const long long budget = v == CoreType::Big ? b_left : l_left;
            // Sequential stages can only ever use one core.
            const long long max_cores = rep ? budget : std::min<long long>(budget, 1);
            for (long long step = 0; step < max_cores; ++step) {
                const long long r = opts.reverse ? max_cores - step : step + 1;
                Rational w = stage_weight(chain, start, end, r, v);
                Rational new_worst = rational_max(worst, w);
                // Strict comparison: equal-period branches are kept so witness
                // statistics stay exact.
                if (new_worst > best.min_period) continue;
                current.push_back(Stage{start, end, r, v});
                search(end + 1, b_left - (v == CoreType::Big ? r : 0),
                       l_left - (v == CoreType::Little ? r : 0), new_worst);
                current.pop_back();
            }
        }
    }

    void search(int start, long long b_left, long long l_left, const Rational& worst) {
        const int n = chain.size();
        if (start > n) {
            record(worst);
            return;
        }
        if (b_left + l_left == 0) return; // tasks remain but no cores do
        if (opts.reverse) {
            for (int end = n; end >= start; --end) place_stage(start, end, b_left, l_left, worst);
        } else {
            for (int end = start; end <= n; ++end) place_stage(start, end, b_left, l_left, worst);
        }
    }
};

void merge(OracleResult& into, OracleResult&& other, const OracleOptions& opts) {
    if (other.min_period > into.min_period) return;
    if (other.min_period < into.min_period) {
        into = std::move(other);
        return;
    }
    if (into.min_period.is_infinite()) return;
    into.witness_count += other.witness_count;
    if (other.min_big_used >= 0 && (into.min_big_used < 0 || other.min_big_used < into.min_big_used))
        into.min_big_used = other.min_big_used;
    if (other.min_total_used >= 0 &&
        (into.min_total_used < 0 || other.min_total_used < into.min_total_used))
        into.min_total_used = other.min_total_used;
    for (auto& w : other.witnesses) {
        if (into.witnesses.size() >= opts.max_stored_witnesses) break;
        into.witnesses.push_back(std::move(w));
    }
}

} // namespace

OracleResult brute_force(const TaskChain& chain, const Platform& platform,
                         const OracleOptions& opts) {
    if (chain.size() > opts.max_tasks)
        throw SizeGuardError("oracle: chain of " + std::to_string(chain.size()) +
                             " tasks exceeds the guard of " + std::to_string(opts.max_tasks));
    if (platform.total() > opts.max_cores)
        throw SizeGuardError("oracle: " + std::to_string(platform.total()) +
                             " cores exceed the guard of " + std::to_string(opts.max_cores));

    const int n = chain.size();
    if (opts.threads == 1) {
        Searcher s(chain, opts);
        s.search(1, platform.big, platform.little, Rational(0));
        return std::move(s.best);
    }

    // Parallel kernel: independent subtrees per first-stage end, merged in the
    // same order the serial reference visits them.
    std::vector<OracleResult> branch(static_cast<std::size_t>(n));
#ifdef _OPENMP
    int want = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(want)
#endif
    for (int end = 1; end <= n; ++end) {
        Searcher s(chain, opts);
        s.place_stage(1, end, platform.big, platform.little, Rational(0));
        branch[static_cast<std::size_t>(end - 1)] = std::move(s.best);
    }
    OracleResult result;
    if (opts.reverse) {
        for (int end = n; end >= 1; --end)
            merge(result, std::move(branch[static_cast<std::size_t>(end - 1)]), opts);
    } else {
        for (int end = 1; end <= n; ++end)
            merge(result, std::move(branch[static_cast<std::size_t>(end - 1)]), opts);
    }
    return result;
}

} // namespace chainsched
