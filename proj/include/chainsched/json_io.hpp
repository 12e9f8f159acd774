#pragma once

#include <string>

#include <json.hpp>

#include "chainsched/chain.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/pinning.hpp"
#include "chainsched/sim.hpp"

namespace chainsched {

using Json = nlohmann::ordered_json;

/// Exact rational from a JSON number or numeric string. Doubles go through
/// their shortest round-trip decimal form, so fixture values like 6342.1 come
/// back as 63421/10, not the nearest binary double.
Rational rational_from_json(const Json& value);

/// Emits an integer when the value is integral, otherwise the closest double.
Json rational_to_json(const Rational& value);

Json chain_to_json(const TaskChain& chain);
TaskChain chain_from_json(const Json& j);

Json platform_to_json(const Platform& platform);
Platform platform_from_json(const Json& j);

Json solution_to_json(const Solution& solution);
/// Stages are read back and the period is recomputed exactly from the chain.
Solution solution_from_json(const Json& j, const TaskChain& chain);

Json pin_map_to_json(const PinMap& map);
Json oracle_result_to_json(const OracleResult& result, bool include_witnesses = true);
Json sim_report_to_json(const SimReport& report, bool include_completions = false);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

TaskChain load_chain_file(const std::string& path);
Platform load_platform_file(const std::string& path);
Solution load_solution_file(const std::string& path, const TaskChain& chain);

/// Optional per-fixture metadata carried next to the task list.
long long chain_bits_per_stream(const Json& chain_json); // 0 when absent

} // namespace chainsched
