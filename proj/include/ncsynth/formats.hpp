#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ncsynth/netgraph.hpp"
#include "ncsynth/planner.hpp"
#include "ncsynth/recolor.hpp"

namespace ncsynth {

inline constexpr int kPlanFormatVersion = 1;

/// Network file: {"nodes": [...], "edges": [{"from","to","cap"}...],
/// "source": label, "terminals": [t1, t2]}. Edge ids are assigned in file
/// order, a capacity-c entry taking c consecutive ids.
Network network_from_json(const nlohmann::json& doc);
nlohmann::json network_to_json(const Network& net);
Network load_network(const std::filesystem::path& path);

nlohmann::json plan_to_json(const TransferPlan& plan);
TransferPlan plan_from_json(const nlohmann::json& doc);
TransferPlan load_plan(const std::filesystem::path& path);
/// Canonical text of a plan file; identical plans give identical bytes.
std::string dump_plan(const TransferPlan& plan);

/// One JSON object per rerouting step, one per line.
std::string trace_to_jsonl(const Network& net, const std::string& pass, const ReroutingTrace& trace);

std::string hex(FieldElement x, unsigned bits);

nlohmann::json parse_json_file(const std::filesystem::path& path);

}  // namespace ncsynth
