// Acceptance suite: one criterion per subcommand, one PASS/FAIL line per
// check, exit status 0 only when every check of the selected criterion holds.

#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chainsched/baselines.hpp"
#include "chainsched/fertac.hpp"
#include "chainsched/harness.hpp"
#include "chainsched/herad.hpp"
#include "chainsched/json_io.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/pinning.hpp"
#include "chainsched/sim.hpp"
#include "chainsched/synth.hpp"
#include "chainsched/twocatac.hpp"

using namespace chainsched;

namespace {

bool check(bool ok, const std::string& label, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << ": " << detail << '\n';
    return ok;
}

std::string fixture(const std::string& rel) {
    return std::string(CHAINSCHED_FIXTURE_DIR) + "/" + rel;
}

double us(const Rational& r) { return r.to_double(); }

// --- criterion 1: DVB-S2 schedule reproduction on the bundled fixtures ---

bool criterion1() {
    bool ok = true;
    TaskChain opi = load_chain_file(fixture("chains/dvbs2_orangepi.json"));
    TaskChain x7 = load_chain_file(fixture("chains/dvbs2_x7ti.json"));

    struct Row {
        const char* label;
        double expected;
        double got;
    };
    std::vector<Row> rows;

    rows.push_back({"herad orangepi (2,2)", 7027.0, us(herad_schedule(opi, Platform(2, 2)).period)});
    rows.push_back({"herad orangepi (4,4)", 3520.5, us(herad_schedule(opi, Platform(4, 4)).period)});
    auto fertac22 = fertac_schedule(opi, Platform(2, 2));
    rows.push_back({"fertac orangepi (2,2)", 7251.4, fertac22 ? us(fertac22->period) : -1.0});
    auto fertac44 = fertac_schedule(opi, Platform(4, 4));
    rows.push_back({"fertac orangepi (4,4)", 5220.7, fertac44 ? us(fertac44->period) : -1.0});
    auto two22 = twocatac_schedule(opi, Platform(2, 2));
    rows.push_back({"twocatac orangepi (2,2)", 7027.0, two22 ? us(two22->period) : -1.0});
    auto otacl = otac_schedule(opi, Platform(2, 2), CoreType::Little);
    rows.push_back({"otac-l orangepi (2,2)", 27050.9, otacl ? us(otacl->period) : -1.0});
    auto otacb = otac_schedule(opi, Platform(2, 2), CoreType::Big);
    rows.push_back({"otac-b orangepi (2,2)", 10413.3, otacb ? us(otacb->period) : -1.0});
    rows.push_back({"herad x7ti (6,8)", 1342.5, us(herad_schedule(x7, Platform(6, 8)).period)});

    for (const auto& row : rows) {
        std::ostringstream detail;
        detail << "expected " << row.expected << " +-0.5 us, got " << row.got << " us";
        ok &= check(std::abs(row.got - row.expected) <= 0.5, row.label, detail.str());
    }
    return ok;
}

// --- criterion 2: herad equals the exhaustive oracle on 500 random instances ---

bool criterion2() {
    int matches = 0;
    const int total = 500;
    SplitMix64 rng(20240101);
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.n_tasks = 2 + static_cast<int>(rng.uniform_int(0, 6)); // 2..8
        spec.stateless_ratio = 0.25 * static_cast<double>(rng.uniform_int(0, 4));
        spec.seed = rng.next();
        TaskChain chain = generate(spec);
        long long total_cores = 1 + static_cast<long long>(rng.uniform_int(0, 3)); // 1..4
        long long big = static_cast<long long>(rng.uniform_int(0, static_cast<std::uint64_t>(total_cores)));
        Platform platform(big, total_cores - big);
        OracleResult truth = brute_force(chain, platform);
        Solution sol = herad_schedule(chain, platform);
        if (sol.period == truth.min_period) {
            ++matches;
        } else {
            std::cout << "  mismatch: seed=" << spec.seed << " n=" << spec.n_tasks << " (" << big
                      << "B," << (total_cores - big) << "L) herad=" << sol.period.str()
                      << " oracle=" << truth.min_period.str() << '\n';
        }
    }
    std::ostringstream detail;
    detail << matches << "/" << total << " instances matched exactly";
    return check(matches == total, "herad equals brute force (exact rational)", detail.str());
}

// --- criterion 3: statistical reproduction of the simulation table ---

bool criterion3() {
    ExperimentConfig config;
    config.chains_per_cell = 1000;
    config.n_tasks = 20;
    config.stateless_ratios = {0.2, 0.5, 0.8};
    config.platforms = {{16, 4}, {10, 10}, {4, 16}};
    config.strategies = {"otac-l", "otac-b", "fertac", "twocatac", "herad"};
    config.base_seed = 20250101;
    config.threads = 0;
    StatsReport report = run_slowdown_study(config);

    // published per-cell statistics being reproduced with a fresh corpus
    std::map<std::pair<std::pair<long long, long long>, double>, double> twocatac_pct{
        {{{16, 4}, 0.2}, 100.0}, {{{16, 4}, 0.5}, 99.6}, {{{16, 4}, 0.8}, 93.0},
        {{{10, 10}, 0.2}, 98.8}, {{{10, 10}, 0.5}, 89.1}, {{{10, 10}, 0.8}, 61.7},
        {{{4, 16}, 0.2}, 100.0}, {{{4, 16}, 0.5}, 91.7},  {{{4, 16}, 0.8}, 41.1}};

    bool ok = true;
    long double fertac_sum = 0;
    long long fertac_runs = 0;
    for (const auto& [cell, published] : twocatac_pct) {
        const auto& [platform, sr] = cell;
        const CellStats& two = report.cells.at(CellKey{platform.first, platform.second, sr, "twocatac"});
        std::ostringstream d2;
        d2 << "(" << platform.first << "B," << platform.second << "L) sr=" << sr << " got "
           << two.pct_optimal << "% vs published " << published << "% (+-2 points)";
        ok &= check(std::abs(two.pct_optimal - published) <= 2.0, "twocatac pct_optimal", d2.str());

        const CellStats& fer = report.cells.at(CellKey{platform.first, platform.second, sr, "fertac"});
        std::ostringstream df;
        df << "(" << platform.first << "B," << platform.second << "L) sr=" << sr << " got "
           << fer.avg_slowdown << " vs published 1.0 (+0.05)";
        ok &= check(fer.avg_slowdown <= 1.0 + 0.05, "fertac avg slowdown", df.str());
        fertac_sum += static_cast<long double>(fer.avg_slowdown) * static_cast<long double>(fer.runs);
        fertac_runs += fer.runs;
    }
    const double fertac_overall = static_cast<double>(fertac_sum / static_cast<long double>(fertac_runs));
    {
        std::ostringstream d;
        d << "got " << fertac_overall << " vs published 1.08 (+0.05)";
        ok &= check(fertac_overall <= 1.08 + 0.05, "fertac overall avg slowdown", d.str());
    }
    {
        const CellStats& otacl = report.cells.at(CellKey{16, 4, 0.2, "otac-l"});
        std::ostringstream d;
        d << "got " << otacl.avg_slowdown << " vs published 9.0 (band [8.0, 10.0])";
        ok &= check(otacl.avg_slowdown >= 8.0 && otacl.avg_slowdown <= 10.0,
                    "otac-l avg slowdown (16B,4L) sr=0.2", d.str());
    }
    return ok;
}

// --- criterion 4: simulator convergence on herad solutions ---

bool criterion4() {
    int converged = 0;
    int ordered = 0;
    const int total = 50;
    SplitMix64 rng(40404);
    const std::vector<std::pair<long long, long long>> platforms{{2, 2}, {4, 4}, {3, 4}, {2, 4}};
    for (int i = 0; i < total; ++i) {
        GenSpec spec;
        spec.n_tasks = 8 + static_cast<int>(rng.uniform_int(0, 8));
        spec.stateless_ratio = 0.2 + 0.2 * static_cast<double>(rng.uniform_int(0, 3));
        spec.seed = rng.next();
        TaskChain chain = generate(spec);
        const auto& [b, l] = platforms[static_cast<std::size_t>(rng.uniform_int(0, platforms.size() - 1))];
        Platform platform(b, l);
        Solution sol = herad_schedule(chain, platform);

        SimConfig config;
        config.streams = 500;
        // align the measurement window to the replica-count cycle so the
        // steady-state phase cancels exactly
        long long cycle = 1;
        for (const auto& stage : sol.stages) cycle = std::lcm(cycle, stage.cores);
        config.warmup_streams = (config.streams - 1) - cycle * ((config.streams - 1 - 100) / cycle);

        SimReport report = simulate(chain, sol, platform, config);
        const double measured = report.measured_period.to_double();
        const double analytic = sol.period.to_double();
        if (std::abs(measured / analytic - 1.0) <= 0.01) ++converged;
        bool identity = true;
        for (std::size_t t = 0; t < report.completion_order.size(); ++t)
            if (report.completion_order[t] != static_cast<long long>(t)) identity = false;
        if (identity) ++ordered;
    }
    bool ok = true;
    ok &= check(converged == total, "measured period within 1% of the analytic period",
                std::to_string(converged) + "/" + std::to_string(total));
    ok &= check(ordered == total, "completion order is the identity",
                std::to_string(ordered) + "/" + std::to_string(total));
    return ok;
}

// --- criterion 5: buffer plan exactness against a brute-force search ---

// Smallest buffer count B where the round-robin slot pattern gives every slot
// a single producer replica and a single consumer replica.
long long smallest_feasible_buffers(long long m, long long n) {
    for (long long b = 1;; ++b) {
        const long long horizon = 2 * b * m * n;
        std::vector<std::set<long long>> producers(static_cast<std::size_t>(b));
        std::vector<std::set<long long>> consumers(static_cast<std::size_t>(b));
        for (long long t = 0; t < horizon; ++t) {
            producers[static_cast<std::size_t>(t % b)].insert(t % m);
            consumers[static_cast<std::size_t>(t % b)].insert(t % n);
        }
        bool feasible = true;
        for (long long s = 0; s < b; ++s)
            if (producers[static_cast<std::size_t>(s)].size() > 1 ||
                consumers[static_cast<std::size_t>(s)].size() > 1)
                feasible = false;
        if (feasible) return b;
    }
}

bool criterion5() {
    bool shapes = true;
    for (long long m = 1; m <= 12; ++m) {
        for (long long n = 1; n <= 12; ++n) {
            TaskChain chain("pair", {Task{1, Rational(6), Rational(6), true},
                                     Task{2, Rational(6), Rational(6), true}});
            Solution sol;
            sol.stages = {Stage{1, 1, m, CoreType::Big}, Stage{2, 2, n, CoreType::Big}};
            const long long planned = buffer_plan(sol).at(0);
            if (m == 1 && planned != n) shapes = false;
            if (m == n && planned != m) shapes = false;
            if (planned != std::lcm(m, n)) shapes = false;
        }
    }
    bool ok = check(shapes, "plan shapes", "(1,n)->n, (m,m)->m, (m,n)->lcm for all m,n <= 12");

    bool brute = true;
    bool ordering = true;
    for (long long m = 1; m <= 4; ++m) {
        for (long long n = 1; n <= 4; ++n) {
            const long long smallest = smallest_feasible_buffers(m, n);
            if (smallest != std::lcm(m, n)) {
                brute = false;
                std::cout << "  (" << m << "," << n << "): smallest feasible " << smallest
                          << " vs lcm " << std::lcm(m, n) << '\n';
            }
            TaskChain chain("pair", {Task{1, Rational(6), Rational(6), true},
                                     Task{2, Rational(9), Rational(9), true}});
            Solution sol = make_solution(chain, {Stage{1, 1, m, CoreType::Big},
                                                 Stage{2, 2, n, CoreType::Big}});
            SimConfig config;
            config.streams = 240;
            config.warmup_streams = 60;
            config.buffers_per_link = smallest;
            SimReport report = simulate(chain, sol, Platform(m + n, 0), config);
            if (!report.ordering_preserved) ordering = false;
        }
    }
    ok &= check(brute, "smallest feasible buffer count equals lcm",
                "brute-force slot search, m,n <= 4");
    ok &= check(ordering, "ordering preserved at the smallest feasible plan", "m,n <= 4");
    return ok;
}

// --- criterion 6: pin maps on the policy-figure topology ---

bool criterion6() {
    Platform topo(4, 4,
                  {Cluster{CoreType::Big, {1, 2}}, Cluster{CoreType::Little, {3, 4}},
                   Cluster{CoreType::Big, {5, 6}}, Cluster{CoreType::Little, {7, 8}}});
    TaskChain chain("threads",
                    {Task{1, Rational(9), Rational(9), false}, Task{2, Rational(1), Rational(1), false},
                     Task{3, Rational(1), Rational(1), false}, Task{4, Rational(9), Rational(9), false}});
    Solution sol = make_solution(chain, {{1, 1, 1, CoreType::Big},
                                         {2, 2, 1, CoreType::Little},
                                         {3, 3, 1, CoreType::Little},
                                         {4, 4, 1, CoreType::Big}});
    PinMap packed = pin(sol, topo, PinPolicy::Packed);
    PinMap distant = pin(sol, topo, PinPolicy::Distant);
    bool ok = true;
    ok &= check(packed.threads[1].cores == std::vector<int>{3} &&
                    packed.threads[2].cores == std::vector<int>{4},
                "packed placement", "t2->C3, t3->C4");
    ok &= check(distant.threads[0].cores == std::vector<int>{1} &&
                    distant.threads[3].cores == std::vector<int>{5},
                "distant placement", "t1->C1, t4->C5");
    return ok;
}

// --- criterion 7: growth-rate properties, medians over 50 chains ---

bool criterion7() {
    bool ok = true;
    {
        const std::vector<int> sizes{20, 40, 80, 160};
        std::vector<TimeProfilePoint> points;
        for (int n : sizes) points.push_back(TimeProfilePoint{"fertac", n, 10, 10, 0.5});
        auto rows = run_time_profile(points, 50, 7001);
        // least-squares slope of log(median time) against log(n)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double count = static_cast<double>(rows.size());
        for (const auto& row : rows) {
            const double x = std::log(static_cast<double>(row.point.n));
            const double y = std::log(row.median_us);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        std::ostringstream d;
        d << "slope " << slope << " over n in {20,40,80,160} (bound 1.4)";
        ok &= check(slope <= 1.4, "fertac log-log growth vs n", d.str());
    }
    {
        auto rows = run_time_profile({TimeProfilePoint{"herad", 20, 10, 10, 0.5},
                                      TimeProfilePoint{"herad", 40, 10, 10, 0.5}},
                                     50, 7002);
        const double ratio = rows[1].median_us / rows[0].median_us;
        std::ostringstream d;
        d << "median(40)/median(20) = " << ratio << " (band [2.5, 6])";
        ok &= check(ratio >= 2.5 && ratio <= 6.0, "herad n-doubling time ratio", d.str());
    }
    {
        auto rows = run_time_profile({TimeProfilePoint{"twocatac", 40, 20, 20, 0.5},
                                      TimeProfilePoint{"twocatac", 40, 20, 20, 0.8}},
                                     50, 7003);
        std::ostringstream d;
        d << "median sr=0.8 " << rows[1].median_us << "us vs sr=0.5 " << rows[0].median_us << "us";
        ok &= check(rows[1].median_us < rows[0].median_us,
                    "twocatac faster at sr=0.8 than sr=0.5 (n=40, 20B/20L)", d.str());
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) criterion = std::atoi(argv[i + 1]);
    }
    bool (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7};
    bool all_ok = true;
    for (int c = 1; c <= 7; ++c) {
        if (criterion != 0 && criterion != c) continue;
        std::cout << "=== criterion " << c << " ===\n";
        const bool ok = checks[c - 1]();
        std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << '\n';
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
