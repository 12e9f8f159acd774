#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chainsched/strategy.hpp"
#include "chainsched/synth.hpp"

namespace chainsched {

struct ExperimentConfig {
    int chains_per_cell = 1000;
    int n_tasks = 20;
    std::vector<double> stateless_ratios{0.2, 0.5, 0.8};
    std::vector<std::pair<long long, long long>> platforms{{16, 4}, {10, 10}, {4, 16}};
    std::vector<std::string> strategies{"otac-l", "otac-b", "fertac", "twocatac", "herad"};
    std::uint64_t base_seed = 1;
    StrategyOptions strategy_options;
    int threads = 1; // parallelism over independent runs
};

/// One (chain, platform, strategy) run. Raw rows are the source of truth;
/// every aggregate is recomputable from them.
struct RunRow {
    long long chain_id = 0;
    std::uint64_t seed = 0;
    int n = 0;
    double sr = 0.0;
    long long big = 0;
    long long little = 0;
    std::string strategy;
    Rational period;
    Rational slowdown; // period / herad period on the same instance
    long long big_used = 0;
    long long little_used = 0;
    long long stages = 0;
    double wall_us = 0.0;
    bool budget_exceeded = false;
};

struct CellKey {
    long long big = 0;
    long long little = 0;
    double sr = 0.0;
    std::string strategy;

    friend bool operator<(const CellKey& a, const CellKey& b) {
        return std::tie(a.big, a.little, a.sr, a.strategy) <
               std::tie(b.big, b.little, b.sr, b.strategy);
    }
};

struct CellStats {
    long long runs = 0;
    long long excluded = 0; // budget-exceeded rows left out of the aggregates
    double pct_optimal = 0.0;
    double avg_slowdown = 0.0;
    Rational median_slowdown;
    Rational max_slowdown;
    double avg_big_used = 0.0;
    double avg_little_used = 0.0;
};

struct StatsReport {
    std::vector<RunRow> rows;
    std::map<CellKey, CellStats> cells;
};

/// Runs every strategy over a fresh synthetic corpus per (platform, SR) cell,
/// with slowdowns taken against herad exactly.
StatsReport run_slowdown_study(const ExperimentConfig& config);

/// Recomputes the per-cell aggregates from raw rows (median and max slowdown
/// compare exactly; averages accumulate in long double).
std::map<CellKey, CellStats> aggregate_rows(const std::vector<RunRow>& rows);

void write_csv(const StatsReport& report, std::ostream& out);

struct TimeProfilePoint {
    std::string strategy;
    int n = 0;
    long long big = 0;
    long long little = 0;
    double sr = 0.0;
};

struct TimeProfileRow {
    TimeProfilePoint point;
    int repetitions = 0;
    double median_us = 0.0;
    double mean_us = 0.0;
    bool truncated = false; // a run hit its budget
};

/// Wall-clock profile per strategy and instance size; medians over fresh
/// chains, no absolute-time assertions anywhere.
std::vector<TimeProfileRow> run_time_profile(const std::vector<TimeProfilePoint>& points,
                                             int repetitions = 50, std::uint64_t base_seed = 99,
                                             const StrategyOptions& options = {});

} // namespace chainsched
