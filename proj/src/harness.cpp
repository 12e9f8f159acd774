#include "chainsched/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "chainsched/herad.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chainsched {

namespace {

double elapsed_us(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - from)
        .count();
}

std::string fmt6(const Rational& value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value.to_double());
    return buf;
}

} // namespace

StatsReport run_slowdown_study(const ExperimentConfig& config) {
    const auto n_sr = config.stateless_ratios.size();
    const auto n_chain = static_cast<std::size_t>(config.chains_per_cell);
    const auto n_plat = config.platforms.size();
    const auto n_strat = config.strategies.size();
    const std::size_t tasks = n_sr * n_chain * n_plat;

    StatsReport report;
    report.rows.resize(tasks * n_strat);

#ifdef _OPENMP
    int want = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(want)
#endif
    for (long long idx = 0; idx < static_cast<long long>(tasks); ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        const std::size_t sr_i = u / (n_chain * n_plat);
        const std::size_t chain_i = (u / n_plat) % n_chain;
        const std::size_t plat_i = u % n_plat;

        GenSpec spec;
        spec.n_tasks = config.n_tasks;
        spec.stateless_ratio = config.stateless_ratios[sr_i];
        // One corpus per SR, shared by every platform.
        spec.seed = config.base_seed + static_cast<std::uint64_t>(sr_i) * n_chain + chain_i;
        const TaskChain chain = generate(spec);
        const auto [b, l] = config.platforms[plat_i];
        const Platform platform(b, l);

        const Solution reference = herad_schedule(chain, platform);

        for (std::size_t s = 0; s < n_strat; ++s) {
            RunRow row;
            row.chain_id = static_cast<long long>(chain_i);
            row.seed = spec.seed;
            row.n = config.n_tasks;
            row.sr = spec.stateless_ratio;
            row.big = b;
            row.little = l;
            row.strategy = config.strategies[s];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                auto solution = run_strategy(row.strategy, chain, platform, config.strategy_options);
                row.wall_us = elapsed_us(t0);
                if (solution) {
                    row.period = solution->period;
                    row.slowdown = solution->period / reference.period;
                    const CoreUsage usage = solution->usage();
                    row.big_used = usage.big;
                    row.little_used = usage.little;
                    row.stages = static_cast<long long>(solution->stage_count());
                } else {
                    row.period = Rational::infinity();
                    row.slowdown = Rational::infinity();
                }
            } catch (const BudgetExceededError&) {
                row.wall_us = elapsed_us(t0);
                row.budget_exceeded = true;
            }
            report.rows[u * n_strat + s] = std::move(row);
        }
    }

    report.cells = aggregate_rows(report.rows);
    return report;
}

std::map<CellKey, CellStats> aggregate_rows(const std::vector<RunRow>& rows) {
    struct Accumulator {
        std::vector<Rational> slowdowns;
        long long optimal = 0;
        long long excluded = 0;
        long double slowdown_sum = 0;
        long double big_sum = 0;
        long double little_sum = 0;
    };
    std::map<CellKey, Accumulator> acc;
    for (const auto& row : rows) {
        auto& a = acc[CellKey{row.big, row.little, row.sr, row.strategy}];
        if (row.budget_exceeded || row.slowdown.is_infinite()) {
            ++a.excluded;
            continue;
        }
        a.slowdowns.push_back(row.slowdown);
        if (row.slowdown == Rational(1)) ++a.optimal;
        a.slowdown_sum += static_cast<long double>(row.slowdown.to_double());
        a.big_sum += static_cast<long double>(row.big_used);
        a.little_sum += static_cast<long double>(row.little_used);
    }

    std::map<CellKey, CellStats> cells;
    for (auto& [key, a] : acc) {
        CellStats stats;
        stats.runs = static_cast<long long>(a.slowdowns.size());
        stats.excluded = a.excluded;
        if (stats.runs > 0) {
            std::sort(a.slowdowns.begin(), a.slowdowns.end());
            const std::size_t n = a.slowdowns.size();
            stats.median_slowdown =
                n % 2 == 1 ? a.slowdowns[n / 2]
                           : (a.slowdowns[n / 2 - 1] + a.slowdowns[n / 2]) / Rational(2);
            stats.max_slowdown = a.slowdowns.back();
            stats.pct_optimal = 100.0 * static_cast<double>(a.optimal) / static_cast<double>(n);
            stats.avg_slowdown = static_cast<double>(a.slowdown_sum / static_cast<long double>(n));
            stats.avg_big_used = static_cast<double>(a.big_sum / static_cast<long double>(n));
            stats.avg_little_used = static_cast<double>(a.little_sum / static_cast<long double>(n));
        }
        cells.emplace(key, std::move(stats));
    }
    return cells;
}

void write_csv(const StatsReport& report, std::ostream& out) {
    out << "chain_id,seed,n,sr,b,l,strategy,period,slowdown,big_used,little_used,stages,wall_us,"
           "flag\n";
    for (const auto& row : report.rows) {
        out << row.chain_id << ',' << row.seed << ',' << row.n << ',' << row.sr << ',' << row.big
            << ',' << row.little << ',' << row.strategy << ',';
        if (row.budget_exceeded)
            out << ",,";
        else
            out << fmt6(row.period) << ',' << fmt6(row.slowdown) << ',';
        out << row.big_used << ',' << row.little_used << ',' << row.stages << ',' << row.wall_us
            << ',' << (row.budget_exceeded ? "budget" : "") << '\n';
    }
}

std::vector<TimeProfileRow> run_time_profile(const std::vector<TimeProfilePoint>& points,
                                             int repetitions, std::uint64_t base_seed,
                                             const StrategyOptions& options) {
    std::vector<TimeProfileRow> rows;
    rows.reserve(points.size());
    for (const auto& point : points) {
        TimeProfileRow row;
        row.point = point;
        row.repetitions = repetitions;
        const Platform platform(point.big, point.little);
        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(repetitions));
        long double sum = 0;
        for (int rep = 0; rep < repetitions; ++rep) {
            GenSpec spec;
            spec.n_tasks = point.n;
            spec.stateless_ratio = point.sr;
            spec.seed = base_seed + static_cast<std::uint64_t>(rep);
            const TaskChain chain = generate(spec);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                (void)run_strategy(point.strategy, chain, platform, options);
            } catch (const BudgetExceededError&) {
                row.truncated = true;
            }
            const double us = elapsed_us(t0);
            times.push_back(us);
            sum += us;
        }
        std::sort(times.begin(), times.end());
        row.median_us = times[times.size() / 2];
        row.mean_us = static_cast<double>(sum / static_cast<long double>(times.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chainsched
