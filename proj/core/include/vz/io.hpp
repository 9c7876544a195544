#pragma once

#include <nlohmann/json.hpp>

#include "vz/circuit.hpp"
#include "vz/compiler.hpp"
#include "vz/sim.hpp"
#include "vz/supremacy.hpp"

namespace vz {

using json = nlohmann::json;

// Circuit file: {"n": …, "edges": [[i,j],…], "layers": [[gate,…],…]}.
// Masks always serialize as index lists.
json circuit_to_json(const Circuit& circuit, const Graph& graph);
std::pair<Circuit, Graph> circuit_from_json(const json& j);

// Schedule file: {"a", "variant", "global_phase", "layers": [{t,b,c,w,v,x},…]}.
json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const json& j);

// Instance file: {"n", "seed", "v": […], "w": [[i,j,angle],…]}.
json instance_to_json(const IqpInstance& instance);
IqpInstance instance_from_json(const json& j);

json depth_report_to_json(const DepthReport& report);
json verification_report_to_json(const VerificationReport& report);

// File helpers; throw ParseError with a readable message on bad input.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace vz
