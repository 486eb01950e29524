#pragma once

#include <json.hpp>

#include "setlink/duality.hpp"
#include "setlink/functions.hpp"
#include "setlink/optimize.hpp"
#include "setlink/properties.hpp"
#include "setlink/sweeps.hpp"

// File formats. All parse failures throw Errc::parse naming the offender.
//
//   family     {"ground": 3 | ["a","b","c"], "family": [[1,2], ...]}
//   graph      {"vertices": 4, "edges": [[1,2], ...], "weights": {"1-2": "3"}}
//   linkage    {"kind": "table", "ground": 2, "default": "2",
//               "entries": [{"x": 1, "set": [1,2], "value": "1"}]}
//              or {"kind": "degree" | "proximity", "graph": {...}}
//   function   {"values": [{"set": [1], "value": "1"}, ...], "empty": "0"}
//
// Elements are 1-based integers, or labels when the ground set has them;
// rationals are "p/q" or integer strings (bare JSON integers also accepted).
// A table linkage takes its ground set from the "ground" field or from the
// surrounding context (e.g. the family a command was given).

namespace setlink {

nlohmann::json element_set_to_json(ElementSet s, const GroundSet& ground);
ElementSet element_set_from_json(const nlohmann::json& j,
                                 const GroundSet& ground,
                                 const std::string& what);

nlohmann::json ground_to_json(const GroundSet& ground);
GroundSet ground_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const SetFamily& family);
SetFamily family_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const WeightedGraph& graph);
WeightedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json linkage_to_json(const LinkageFunction& pi);
LinkageFunction linkage_from_json(const nlohmann::json& j,
                                  const GroundSet* context = nullptr);

nlohmann::json set_function_to_json(const SetFunction& f);
SetFunction set_function_from_json(const nlohmann::json& j,
                                   const SetFamily& family);

nlohmann::json witness_to_json(const Witness& witness, const GroundSet& ground);
nlohmann::json verdict_to_json(std::string_view property, const Verdict& verdict,
                               const GroundSet& ground);
nlohmann::json property_report_to_json(const PropertyReport& report,
                                       const GroundSet& ground);
nlohmann::json peeling_trace_to_json(const PeelingTrace& trace,
                                     const GroundSet& ground);
nlohmann::json duality_report_to_json(const DualityReport& report,
                                      const GroundSet& ground);
nlohmann::json sweep_report_to_json(const SweepReport& report);

}  // namespace setlink
