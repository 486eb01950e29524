#include "setlink/json_io.hpp"

#include <algorithm>

namespace setlink {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& message) {
  throw Error(Errc::parse, message);
}

Element element_from_json(const json& j, const GroundSet& ground,
                          const std::string& what) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 1 || v > ground.size())
      bad(what + ": element " + std::to_string(v) + " outside 1.." +
          std::to_string(ground.size()));
    return static_cast<Element>(v - 1);
  }
  if (j.is_string()) {
    if (auto e = ground.element_by_label(j.get<std::string>())) return *e;
    bad(what + ": unknown label '" + j.get<std::string>() + "'");
  }
  bad(what + ": element must be a 1-based integer or a label");
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(what + ": " + e.what());
    }
  }
  bad(what + ": value must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& value) {
  return format_rational(value);
}

}  // namespace

json element_set_to_json(ElementSet s, const GroundSet& ground) {
  json out = json::array();
  for (Element e : s) {
    if (ground.labels())
      out.push_back(ground.label(e));
    else
      out.push_back(e + 1);
  }
  return out;
}

ElementSet element_set_from_json(const json& j, const GroundSet& ground,
                                 const std::string& what) {
  if (!j.is_array()) bad(what + ": expected an array of elements");
  ElementSet out;
  for (const json& item : j) {
    Element e = element_from_json(item, ground, what);
    if (out.contains(e)) bad(what + ": duplicate element " + ground.label(e));
    out = out.with(e);
  }
  return out;
}

json ground_to_json(const GroundSet& ground) {
  if (ground.labels()) return json(*ground.labels());
  return json(ground.size());
}

GroundSet ground_from_json(const json& j) {
  if (j.is_number_integer()) {
    long long n = j.get<long long>();
    if (n < 1 || n > GroundSet::max_size)
      bad("ground size " + std::to_string(n) + " outside 1.." +
          std::to_string(GroundSet::max_size));
    return GroundSet(static_cast<int>(n));
  }
  if (j.is_array()) {
    std::vector<std::string> labels;
    for (const json& item : j) {
      if (!item.is_string()) bad("ground labels must be strings");
      labels.push_back(item.get<std::string>());
    }
    if (labels.empty() ||
        static_cast<int>(labels.size()) > GroundSet::max_size)
      bad("ground label count outside 1.." +
          std::to_string(GroundSet::max_size));
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      bad("duplicate ground label");
    int size = static_cast<int>(labels.size());
    return GroundSet(size, std::move(labels));
  }
  bad("ground must be a size or a list of labels");
}

json family_to_json(const SetFamily& family) {
  json members = json::array();
  for (ElementSet m : family.members())
    members.push_back(element_set_to_json(m, family.ground()));
  return json{{"ground", ground_to_json(family.ground())},
              {"family", members}};
}

SetFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("family"))
    bad("family file needs 'ground' and 'family'");
  GroundSet ground = ground_from_json(j.at("ground"));
  const json& raw = j.at("family");
  if (!raw.is_array()) bad("'family' must be an array of sets");
  std::vector<ElementSet> members;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    ElementSet m = element_set_from_json(
        raw[i], ground, "family member #" + std::to_string(i + 1));
    if (std::find(members.begin(), members.end(), m) != members.end())
      bad("duplicate family member " + to_string(m, ground) + " (member #" +
          std::to_string(i + 1) + ")");
    members.push_back(m);
  }
  return SetFamily(std::move(ground), std::move(members));
}

json graph_to_json(const WeightedGraph& graph) {
  json edges = json::array();
  for (auto [a, b] : graph.edges())
    edges.push_back(json::array({a + 1, b + 1}));
  json out{{"vertices", ground_to_json(graph.vertices())}, {"edges", edges}};
  if (!graph.explicit_weights().empty()) {
    json weights = json::object();
    for (const auto& [edge, w] : graph.explicit_weights())
      weights[std::to_string(edge.first + 1) + "-" +
              std::to_string(edge.second + 1)] = rational_to_json(w);
    out["weights"] = weights;
  }
  return out;
}

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    bad("graph file needs 'vertices'");
  GroundSet vertices = ground_from_json(j.at("vertices"));
  std::vector<std::pair<Element, Element>> edges;
  if (j.contains("edges")) {
    const json& raw = j.at("edges");
    if (!raw.is_array()) bad("'edges' must be an array of pairs");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const json& e = raw[i];
      std::string what = "edge #" + std::to_string(i + 1);
      if (!e.is_array() || e.size() != 2) bad(what + ": expected a pair");
      edges.emplace_back(element_from_json(e[0], vertices, what),
                         element_from_json(e[1], vertices, what));
    }
  }
  std::map<std::pair<Element, Element>, Rational> weights;
  if (j.contains("weights")) {
    const json& raw = j.at("weights");
    if (!raw.is_object()) bad("'weights' must map \"a-b\" keys to values");
    for (const auto& [key, value] : raw.items()) {
      auto dash = key.find('-');
      if (dash == std::string::npos) bad("weight key '" + key + "' is not a-b");
      Element a = element_from_json(json::parse(key.substr(0, dash), nullptr,
                                                false),
                                    vertices, "weight key '" + key + "'");
      Element b = element_from_json(json::parse(key.substr(dash + 1), nullptr,
                                                false),
                                    vertices, "weight key '" + key + "'");
      if (a > b) std::swap(a, b);
      weights[{a, b}] = rational_from_json(value, "weight '" + key + "'");
    }
  }
  try {
    return WeightedGraph(std::move(vertices), std::move(edges),
                         std::move(weights));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json linkage_to_json(const LinkageFunction& pi) {
  switch (pi.kind()) {
    case LinkageFunction::Kind::table: {
      json entries = json::array();
      for (const auto& entry : pi.table_entries())
        entries.push_back(
            {{"x", pi.ground().labels() ? json(pi.ground().label(entry.x))
                                        : json(entry.x + 1)},
             {"set", element_set_to_json(entry.set, pi.ground())},
             {"value", rational_to_json(entry.value)}});
      json out{{"kind", "table"},
               {"ground", ground_to_json(pi.ground())},
               {"entries", entries}};
      if (pi.fallback()) out["default"] = rational_to_json(*pi.fallback());
      return out;
    }
    case LinkageFunction::Kind::degree:
      return json{{"kind", "degree"}, {"graph", graph_to_json(*pi.graph())}};
    case LinkageFunction::Kind::proximity:
      return json{{"kind", "proximity"}, {"graph", graph_to_json(*pi.graph())}};
  }
  throw Error(Errc::internal, "unknown linkage kind");
}

LinkageFunction linkage_from_json(const json& j, const GroundSet* context) {
  if (!j.is_object() || !j.contains("kind")) bad("linkage file needs 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "degree" || kind == "proximity") {
    if (!j.contains("graph")) bad("'" + kind + "' linkage needs 'graph'");
    WeightedGraph graph = graph_from_json(j.at("graph"));
    try {
      return kind == "degree" ? LinkageFunction::degree(std::move(graph))
                              : LinkageFunction::proximity(std::move(graph));
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (kind != "table") bad("unknown linkage kind '" + kind + "'");
  std::optional<GroundSet> ground;
  if (j.contains("ground"))
    ground = ground_from_json(j.at("ground"));
  else if (context)
    ground = *context;
  else
    bad("table linkage needs a 'ground' (none given by context)");
  std::vector<LinkageFunction::TableEntry> entries;
  if (j.contains("entries")) {
    const json& raw = j.at("entries");
    if (!raw.is_array()) bad("'entries' must be an array");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const json& e = raw[i];
      std::string what = "entry #" + std::to_string(i + 1);
      if (!e.is_object() || !e.contains("x") || !e.contains("set") ||
          !e.contains("value"))
        bad(what + ": needs 'x', 'set' and 'value'");
      entries.push_back({element_from_json(e.at("x"), *ground, what),
                         element_set_from_json(e.at("set"), *ground, what),
                         rational_from_json(e.at("value"), what)});
    }
  }
  std::optional<Rational> fallback;
  if (j.contains("default"))
    fallback = rational_from_json(j.at("default"), "'default'");
  try {
    return LinkageFunction::table(std::move(*ground), std::move(entries),
                                  std::move(fallback));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json set_function_to_json(const SetFunction& f) {
  json values = json::array();
  for (const auto& [set, value] : f.entries())
    values.push_back({{"set", element_set_to_json(set, f.family().ground())},
                      {"value", rational_to_json(value)}});
  json out{{"values", values}};
  if (f.empty_value()) out["empty"] = rational_to_json(*f.empty_value());
  return out;
}

SetFunction set_function_from_json(const json& j, const SetFamily& family) {
  if (!j.is_object() || !j.contains("values"))
    bad("function file needs 'values'");
  const json& raw = j.at("values");
  if (!raw.is_array()) bad("'values' must be an array");
  std::vector<std::pair<ElementSet, Rational>> values;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const json& e = raw[i];
    std::string what = "value #" + std::to_string(i + 1);
    if (!e.is_object() || !e.contains("set") || !e.contains("value"))
      bad(what + ": needs 'set' and 'value'");
    values.emplace_back(
        element_set_from_json(e.at("set"), family.ground(), what),
        rational_from_json(e.at("value"), what));
  }
  std::optional<Rational> empty_value;
  if (j.contains("empty"))
    empty_value = rational_from_json(j.at("empty"), "'empty'");
  try {
    return SetFunction(family, std::move(values), std::move(empty_value));
  } catch (const Error& e) {
    bad(e.what());  // e.g. a member without a value, named in the message
  }
}

json witness_to_json(const Witness& witness, const GroundSet& ground) {
  json out = json::object();
  for (const auto& [role, set] : witness.sets)
    out[role] = element_set_to_json(set, ground);
  for (const auto& [role, element] : witness.elements)
    out[role] = ground.labels() ? json(ground.label(element))
                                : json(element + 1);
  return out;
}

json verdict_to_json(std::string_view property, const Verdict& verdict,
                     const GroundSet& ground) {
  return json{{"property", std::string(property)},
              {"holds", verdict.holds},
              {"witness", verdict.witness
                              ? witness_to_json(*verdict.witness, ground)
                              : json(nullptr)}};
}

json property_report_to_json(const PropertyReport& report,
                             const GroundSet& ground) {
  return json{
      {"ground", ground_to_json(ground)},
      {"properties",
       json::array(
           {verdict_to_json("accessible", report.accessible, ground),
            verdict_to_json("up_accessible", report.up_accessible, ground),
            verdict_to_json("chain", report.chain, ground),
            verdict_to_json("heritage", report.heritage, ground),
            verdict_to_json("closure_space", report.closure_space, ground),
            verdict_to_json("convex_geometry", report.convex_geometry,
                            ground)})}};
}

json peeling_trace_to_json(const PeelingTrace& trace, const GroundSet& ground) {
  json chain = json::array();
  for (ElementSet s : trace.chain)
    chain.push_back(element_set_to_json(s, ground));
  json removed = json::array();
  for (Element e : trace.removed)
    removed.push_back(ground.labels() ? json(ground.label(e)) : json(e + 1));
  json values = json::array();
  for (const Rational& v : trace.values) values.push_back(rational_to_json(v));
  return json{{"chain", chain},
              {"removed", removed},
              {"values", values},
              {"best_index", trace.best_index}};
}

json duality_report_to_json(const DualityReport& report,
                            const GroundSet& ground) {
  json checks = json::array();
  for (const auto& check : report.checks)
    checks.push_back(verdict_to_json(check.claim, check.verdict, ground));
  return json{{"instance", report.instance},
              {"checks", checks},
              {"all_hold", report.all_hold()}};
}

json sweep_report_to_json(const SweepReport& report) {
  return json{{"claim", report.claim},
              {"n", report.n},
              {"families", report.families},
              {"instances", report.instances},
              {"violations", report.violations},
              {"first_violation", report.first_violation.empty()
                                      ? json(nullptr)
                                      : json(report.first_violation)}};
}

}  // namespace setlink
