#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "chainsched/baselines.hpp"
#include "chainsched/harness.hpp"
#include "chainsched/json_io.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/pinning.hpp"
#include "chainsched/sim.hpp"
#include "chainsched/strategy.hpp"
#include "chainsched/synth.hpp"

#include <fstream>
#include <sstream>

namespace {

using namespace chainsched;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;

std::string fixture_dir() {
    if (const char* env = std::getenv("CHAINSCHED_FIXTURES")) return env;
#ifdef CHAINSCHED_DEFAULT_FIXTURE_DIR
    return CHAINSCHED_DEFAULT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

void emit(const Json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::vector<std::pair<long long, long long>> parse_platform_list(const std::string& text) {
    std::vector<std::pair<long long, long long>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos) throw InputError("platform list entries look like 'b,l'");
        out.emplace_back(std::stoll(item.substr(0, comma)), std::stoll(item.substr(comma + 1)));
    }
    if (out.empty()) throw InputError("empty platform list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw InputError("empty list");
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"pipelined task-chain scheduling toolkit for big.LITTLE platforms"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output for every subcommand");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic task chain");
    GenSpec spec;
    std::string gen_out;
    gen->add_option("--n", spec.n_tasks, "number of tasks")->required();
    gen->add_option("--sr", spec.stateless_ratio, "stateless (replicable) ratio in [0,1]");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--wmin", spec.weight_min, "minimum big-core weight");
    gen->add_option("--wmax", spec.weight_max, "maximum big-core weight");
    gen->add_option("--smin", spec.slowdown_min, "minimum little-core slowdown");
    gen->add_option("--smax", spec.slowdown_max, "maximum little-core slowdown");
    gen->add_option("-o,--out", gen_out, "write the chain JSON here instead of stdout");

    // schedule
    auto* sched = app.add_subcommand("schedule", "compute a pipelined schedule");
    std::string strategy, chain_path, platform_path;
    StrategyOptions strategy_options;
    long long bits_per_stream = 0;
    sched->add_option("--strategy", strategy, "fertac|twocatac|herad|otac-b|otac-l|os-r1|os-r2|os-r3")
        ->required();
    sched->add_option("--chain", chain_path, "chain JSON file")->required();
    sched->add_option("--platform", platform_path, "platform JSON file")->required();
    sched->add_option("--twocatac-budget", strategy_options.twocatac_budget,
                      "expansion budget for twocatac");
    sched->add_option("--bits-per-stream", bits_per_stream,
                      "bits per stream for the throughput line (default: fixture metadata)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum-period search");
    OracleOptions oracle_options;
    oracle_cmd->add_option("--chain", chain_path, "chain JSON file")->required();
    oracle_cmd->add_option("--platform", platform_path, "platform JSON file")->required();
    oracle_cmd->add_option("--max-tasks", oracle_options.max_tasks, "size guard on tasks");
    oracle_cmd->add_option("--max-cores", oracle_options.max_cores, "size guard on cores");
    oracle_cmd->add_option("--threads", oracle_options.threads, "1 = serial reference, 0 = all");
    oracle_cmd->add_flag("--reverse", oracle_options.reverse, "enumerate in reverse order");
    bool with_witnesses = false;
    oracle_cmd->add_flag("--witnesses", with_witnesses, "include witness solutions in the output");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "run a solution through the pipeline simulator");
    std::string solution_path;
    SimConfig sim_config;
    sim_cmd->add_option("--chain", chain_path, "chain JSON file")->required();
    sim_cmd->add_option("--solution", solution_path, "solution JSON file")->required();
    sim_cmd->add_option("--platform", platform_path, "platform JSON file")->required();
    sim_cmd->add_option("--streams", sim_config.streams, "streams to push");
    sim_cmd->add_option("--warmup", sim_config.warmup_streams, "streams excluded from measurement");
    sim_cmd->add_option("--buffers", sim_config.buffers_per_link,
                        "uniform per-link buffer override (default: lcm plan)");

    // buffers
    auto* buffers_cmd = app.add_subcommand("buffers", "per-link buffer plan of a solution");
    buffers_cmd->add_option("--chain", chain_path, "chain JSON file")->required();
    buffers_cmd->add_option("--solution", solution_path, "solution JSON file")->required();

    // pin
    auto* pin_cmd = app.add_subcommand("pin", "compute a thread pin map");
    std::string policy_name = "packed";
    pin_cmd->add_option("--chain", chain_path, "chain JSON file")->required();
    pin_cmd->add_option("--solution", solution_path, "solution JSON file")->required();
    pin_cmd->add_option("--platform", platform_path, "platform JSON with a cluster topology")
        ->required();
    pin_cmd->add_option("--policy", policy_name, "loose|guided|packed|distant");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "slowdown study over a synthetic corpus");
    ExperimentConfig experiment;
    std::string platforms_text = "16,4;10,10;4,16";
    std::string srs_text = "0.2,0.5,0.8";
    std::string strategies_text = "otac-l,otac-b,fertac,twocatac,herad";
    std::string csv_out;
    bool summary = false;
    sweep->add_option("--chains", experiment.chains_per_cell, "chains per cell");
    sweep->add_option("--n", experiment.n_tasks, "tasks per chain");
    sweep->add_option("--platforms", platforms_text, "semicolon list of b,l pairs");
    sweep->add_option("--sr", srs_text, "comma list of stateless ratios");
    sweep->add_option("--strategies", strategies_text, "comma list of strategies");
    sweep->add_option("--seed", experiment.base_seed, "corpus base seed");
    sweep->add_option("--threads", experiment.threads, "parallel runs (0 = all cores)");
    sweep->add_option("--twocatac-budget", experiment.strategy_options.twocatac_budget,
                      "expansion budget for twocatac");
    sweep->add_option("--out", csv_out, "write raw CSV rows here")->required();
    sweep->add_flag("--summary", summary, "print per-cell aggregates");

    // bench
    auto* bench = app.add_subcommand("bench", "strategy wall-time profile");
    std::string bench_strategies = "fertac,twocatac,herad";
    std::string bench_n = "20,40";
    std::string bench_platform = "20,20";
    std::string bench_sr = "0.2,0.5,0.8";
    int bench_reps = 50;
    std::uint64_t bench_seed = 99;
    bench->add_option("--strategies", bench_strategies, "comma list of strategies");
    bench->add_option("--n", bench_n, "comma list of chain sizes");
    bench->add_option("--platform", bench_platform, "one b,l pair");
    bench->add_option("--sr", bench_sr, "comma list of stateless ratios");
    bench->add_option("--reps", bench_reps, "chains per point");
    bench->add_option("--seed", bench_seed, "corpus base seed");

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "list the bundled chain profiles");
    std::string fixtures_dir_opt;
    fixtures_cmd->add_option("--dir", fixtures_dir_opt, "fixture directory override");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        TaskChain chain = generate(spec);
        Json j = chain_to_json(chain);
        if (!gen_out.empty()) {
            save_json_file(gen_out, j);
            emit(Json{{"written", gen_out}}, json_mode, "wrote " + gen_out + "\n");
        } else {
            std::cout << j.dump(2) << '\n';
        }
        return kExitOk;
    }

    if (sched->parsed()) {
        Json chain_json = load_json_file(chain_path);
        TaskChain chain = chain_from_json(chain_json);
        Platform platform = load_platform_file(platform_path);
        if (!is_strategy_name(strategy)) throw InputError("unknown strategy: " + strategy);
        std::optional<Solution> solution;
        try {
            solution = run_strategy(strategy, chain, platform, strategy_options);
        } catch (const BudgetExceededError& e) {
            std::cerr << "budget exceeded: " << e.what() << '\n';
            return kExitInfeasible;
        }
        if (!solution) {
            std::cerr << "no feasible schedule for strategy " << strategy << '\n';
            return kExitInfeasible;
        }
        if (bits_per_stream == 0) bits_per_stream = chain_bits_per_stream(chain_json);
        Json j = solution_to_json(*solution);
        j["strategy"] = strategy;
        j["big_used"] = solution->usage().big;
        j["little_used"] = solution->usage().little;
        std::ostringstream text;
        text << "strategy:    " << strategy << "\n"
             << "period:      " << solution->period.to_double() << " us\n"
             << "stages:      " << solution->stage_count() << "\n"
             << "cores used:  " << solution->usage().big << "B + " << solution->usage().little
             << "L\n";
        if (bits_per_stream > 0) {
            double mbps = static_cast<double>(bits_per_stream) / solution->period.to_double();
            j["throughput_mbps"] = mbps;
            text << "throughput:  " << mbps << " Mb/s (" << bits_per_stream << " bits/stream)\n";
        }
        text << solution_to_json(*solution).dump(2) << '\n';
        emit(j, json_mode, text.str());
        return kExitOk;
    }

    if (oracle_cmd->parsed()) {
        TaskChain chain = load_chain_file(chain_path);
        Platform platform = load_platform_file(platform_path);
        OracleResult result = brute_force(chain, platform, oracle_options);
        Json j = oracle_result_to_json(result, with_witnesses);
        emit(j, json_mode, j.dump(2) + "\n");
        return kExitOk;
    }

    if (sim_cmd->parsed()) {
        TaskChain chain = load_chain_file(chain_path);
        Platform platform = load_platform_file(platform_path);
        Solution solution = load_solution_file(solution_path, chain);
        SimReport report = simulate(chain, solution, platform, sim_config);
        Json j = sim_report_to_json(report, true);
        std::ostringstream text;
        text << "measured period: " << report.measured_period.to_double() << " us\n"
             << "analytic period: " << solution.period.to_double() << " us\n"
             << "ordering preserved: " << (report.ordering_preserved ? "yes" : "no") << '\n';
        emit(j, json_mode, text.str());
        return kExitOk;
    }

    if (buffers_cmd->parsed()) {
        TaskChain chain = load_chain_file(chain_path);
        Solution solution = load_solution_file(solution_path, chain);
        std::vector<long long> plan = buffer_plan(solution);
        Json j{{"links", plan}};
        std::ostringstream text;
        text << "links:";
        for (long long b : plan) text << ' ' << b;
        text << '\n';
        emit(j, json_mode, text.str());
        return kExitOk;
    }

    if (pin_cmd->parsed()) {
        TaskChain chain = load_chain_file(chain_path);
        Platform platform = load_platform_file(platform_path);
        Solution solution = load_solution_file(solution_path, chain);
        PinMap map = pin(solution, platform, pin_policy_from_name(policy_name));
        Json j = pin_map_to_json(map);
        emit(j, json_mode, j.dump(2) + "\n");
        return kExitOk;
    }

    if (sweep->parsed()) {
        experiment.platforms = parse_platform_list(platforms_text);
        experiment.stateless_ratios = parse_double_list(srs_text);
        experiment.strategies = parse_name_list(strategies_text);
        for (const auto& name : experiment.strategies)
            if (!is_strategy_name(name)) throw InputError("unknown strategy: " + name);
        StatsReport report = run_slowdown_study(experiment);
        std::ofstream out(csv_out);
        if (!out) throw InputError("cannot write " + csv_out);
        write_csv(report, out);
        Json cells = Json::array();
        std::ostringstream text;
        for (const auto& [key, stats] : report.cells) {
            cells.push_back(Json{{"b", key.big},
                                 {"l", key.little},
                                 {"sr", key.sr},
                                 {"strategy", key.strategy},
                                 {"pct_optimal", stats.pct_optimal},
                                 {"avg_slowdown", stats.avg_slowdown},
                                 {"median_slowdown", stats.median_slowdown.to_double()},
                                 {"max_slowdown", stats.max_slowdown.to_double()},
                                 {"avg_big_used", stats.avg_big_used},
                                 {"avg_little_used", stats.avg_little_used},
                                 {"runs", stats.runs},
                                 {"excluded", stats.excluded}});
            if (summary)
                text << "(" << key.big << "B," << key.little << "L) sr=" << key.sr << ' '
                     << key.strategy << ": opt=" << stats.pct_optimal << "% avg=" << stats.avg_slowdown
                     << " max=" << stats.max_slowdown.to_double() << " cores=("
                     << stats.avg_big_used << "," << stats.avg_little_used << ")\n";
        }
        text << "wrote " << report.rows.size() << " rows to " << csv_out << '\n';
        emit(Json{{"rows", report.rows.size()}, {"csv", csv_out}, {"cells", cells}}, json_mode,
             text.str());
        return kExitOk;
    }

    if (bench->parsed()) {
        auto platform_pair = parse_platform_list(bench_platform).at(0);
        std::vector<TimeProfilePoint> points;
        for (const auto& name : parse_name_list(bench_strategies))
            for (double n : parse_double_list(bench_n))
                for (double sr : parse_double_list(bench_sr))
                    points.push_back(TimeProfilePoint{name, static_cast<int>(n),
                                                      platform_pair.first, platform_pair.second, sr});
        auto rows = run_time_profile(points, bench_reps, bench_seed);
        Json j = Json::array();
        std::ostringstream text;
        for (const auto& row : rows) {
            j.push_back(Json{{"strategy", row.point.strategy},
                             {"n", row.point.n},
                             {"b", row.point.big},
                             {"l", row.point.little},
                             {"sr", row.point.sr},
                             {"median_us", row.median_us},
                             {"mean_us", row.mean_us},
                             {"truncated", row.truncated}});
            text << row.point.strategy << " n=" << row.point.n << " sr=" << row.point.sr
                 << " median=" << row.median_us << "us mean=" << row.mean_us << "us"
                 << (row.truncated ? " (budget hit)" : "") << '\n';
        }
        emit(j, json_mode, text.str());
        return kExitOk;
    }

    if (fixtures_cmd->parsed()) {
        std::string dir = fixtures_dir_opt.empty() ? fixture_dir() : fixtures_dir_opt;
        Json list = Json::array();
        std::ostringstream text;
        std::filesystem::path chains = std::filesystem::path(dir) / "chains";
        if (!std::filesystem::exists(chains))
            throw InputError("no fixture directory at " + chains.string());
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(chains))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            Json j = load_json_file(file.string());
            TaskChain chain = chain_from_json(j);
            list.push_back(Json{{"file", file.string()},
                                {"name", chain.name()},
                                {"tasks", chain.size()},
                                {"bits_per_stream", chain_bits_per_stream(j)}});
            text << chain.name() << "  (" << chain.size() << " tasks, " << chain_bits_per_stream(j)
                 << " bits/stream)  " << file.string() << '\n';
        }
        emit(list, json_mode, text.str());
        return kExitOk;
    }

    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const DeadlockError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
