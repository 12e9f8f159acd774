#include "chainsched/json_io.hpp"

#include <fstream>

namespace chainsched {

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_unsigned()) return Rational(static_cast<long long>(value.get<std::uint64_t>()));
    if (value.is_number_float()) return Rational::from_decimal(value.dump());
    if (value.is_string()) return Rational::from_decimal(value.get<std::string>());
    throw InputError("expected a number, got: " + value.dump());
}

Json rational_to_json(const Rational& value) {
    if (value.is_infinite()) return Json("inf");
    if (value.den() == 1) return Json(value.num());
    return Json(value.to_double());
}

Json chain_to_json(const TaskChain& chain) {
    Json tasks = Json::array();
    for (const auto& t : chain.tasks()) {
        tasks.push_back(Json{{"id", t.id},
                             {"wb", rational_to_json(t.weight_big)},
                             {"wl", rational_to_json(t.weight_little)},
                             {"rep", t.replicable}});
    }
    return Json{{"name", chain.name()}, {"tasks", std::move(tasks)}};
}

TaskChain chain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tasks") || !j["tasks"].is_array())
        throw InputError("chain JSON needs a 'tasks' array");
    std::vector<Task> tasks;
    tasks.reserve(j["tasks"].size());
    for (const auto& t : j["tasks"]) {
        Task task;
        task.id = t.at("id").get<int>();
        task.weight_big = rational_from_json(t.at("wb"));
        task.weight_little = rational_from_json(t.at("wl"));
        task.replicable = t.at("rep").get<bool>();
        tasks.push_back(std::move(task));
    }
    std::string name = j.value("name", std::string("chain"));
    return TaskChain(std::move(name), std::move(tasks));
}

Json platform_to_json(const Platform& platform) {
    Json j{{"big", platform.big}, {"little", platform.little}};
    if (platform.has_topology()) {
        Json clusters = Json::array();
        for (const auto& c : platform.clusters)
            clusters.push_back(Json{{"type", std::string(1, core_type_code(c.type))},
                                    {"cores", c.cores}});
        j["clusters"] = std::move(clusters);
    }
    return j;
}

Platform platform_from_json(const Json& j) {
    const long long big = j.at("big").get<long long>();
    const long long little = j.at("little").get<long long>();
    std::vector<Cluster> clusters;
    if (j.contains("clusters")) {
        for (const auto& c : j["clusters"]) {
            Cluster cluster;
            const auto type = c.at("type").get<std::string>();
            if (type.size() != 1) throw InputError("cluster type must be 'B' or 'L'");
            cluster.type = core_type_from_code(type[0]);
            cluster.cores = c.at("cores").get<std::vector<int>>();
            clusters.push_back(std::move(cluster));
        }
    }
    return Platform(big, little, std::move(clusters));
}

Json solution_to_json(const Solution& solution) {
    Json stages = Json::array();
    for (const auto& s : solution.stages)
        stages.push_back(Json{{"first", s.first},
                              {"last", s.last},
                              {"r", s.cores},
                              {"v", std::string(1, core_type_code(s.type))}});
    return Json{{"period", solution.period.to_double()}, {"stages", std::move(stages)}};
}

Solution solution_from_json(const Json& j, const TaskChain& chain) {
    if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array())
        throw InputError("solution JSON needs a 'stages' array");
    std::vector<Stage> stages;
    for (const auto& s : j["stages"]) {
        Stage stage;
        stage.first = s.at("first").get<int>();
        stage.last = s.at("last").get<int>();
        stage.cores = s.at("r").get<long long>();
        const auto v = s.at("v").get<std::string>();
        if (v.size() != 1) throw InputError("stage type must be 'B' or 'L'");
        stage.type = core_type_from_code(v[0]);
        stages.push_back(stage);
    }
    return make_solution(chain, std::move(stages));
}

Json pin_map_to_json(const PinMap& map) {
    Json threads = Json::array();
    for (const auto& t : map.threads) {
        Json entry{{"stage", t.stage},
                   {"replica", t.replica},
                   {"type", std::string(1, core_type_code(t.type))}};
        switch (t.kind) {
        case ThreadPin::Kind::AnyCore: entry["any"] = true; break;
        case ThreadPin::Kind::CoreSet: entry["cores"] = t.cores; break;
        case ThreadPin::Kind::SingleCore: entry["core"] = t.cores.at(0); break;
        }
        threads.push_back(std::move(entry));
    }
    return Json{{"policy", pin_policy_name(map.policy)}, {"threads", std::move(threads)}};
}

Json oracle_result_to_json(const OracleResult& result, bool include_witnesses) {
    Json j{{"min_period", result.min_period.to_double()},
           {"min_period_num", result.min_period.num()},
           {"min_period_den", result.min_period.den()},
           {"witness_count", result.witness_count},
           {"min_big_used", result.min_big_used},
           {"min_total_used", result.min_total_used}};
    if (include_witnesses) {
        Json witnesses = Json::array();
        for (const auto& w : result.witnesses) witnesses.push_back(solution_to_json(w));
        j["witnesses"] = std::move(witnesses);
    }
    return j;
}

Json sim_report_to_json(const SimReport& report, bool include_completions) {
    Json j{{"measured_period", report.measured_period.to_double()},
           {"measured_period_num", report.measured_period.num()},
           {"measured_period_den", report.measured_period.den()},
           {"ordering_preserved", report.ordering_preserved},
           {"per_stage_busy", report.per_stage_busy}};
    if (include_completions) {
        Json order = Json::array();
        for (long long id : report.completion_order) order.push_back(id);
        j["completion_order"] = std::move(order);
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

TaskChain load_chain_file(const std::string& path) { return chain_from_json(load_json_file(path)); }

Platform load_platform_file(const std::string& path) {
    return platform_from_json(load_json_file(path));
}

Solution load_solution_file(const std::string& path, const TaskChain& chain) {
    return solution_from_json(load_json_file(path), chain);
}

long long chain_bits_per_stream(const Json& chain_json) {
    if (chain_json.contains("meta") && chain_json["meta"].contains("bits_per_stream"))
        return chain_json["meta"]["bits_per_stream"].get<long long>();
    return 0;
}

} // namespace chainsched
