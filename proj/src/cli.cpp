#include "setlink/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "setlink/duality.hpp"
#include "setlink/generators.hpp"
#include "setlink/json_io.hpp"
#include "setlink/optimize.hpp"
#include "setlink/sweeps.hpp"

namespace setlink::cli {

namespace {

using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse:
    case Errc::invalid:
    case Errc::unknown_fixture:
      return 2;
    case Errc::capacity_exceeded:
      return 4;
    case Errc::internal:
      return 1;
    default:
      return 3;
  }
}

int family_cap() {
  if (const char* env = std::getenv("SETLINK_MAX_N")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return FamilyEnumerator::default_max_n;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::parse, "invalid JSON in '" + path + "'");
  return j;
}

bool strip_prefix(std::string& arg, std::string_view prefix) {
  if (arg.rfind(prefix, 0) != 0) return false;
  arg.erase(0, prefix.size());
  return true;
}

SetFamily resolve_family(std::string arg) {
  if (strip_prefix(arg, "fixture:")) return fixture_family(arg);
  if (strip_prefix(arg, "powerset:")) {
    int n = std::atoi(arg.c_str());
    if (n < 1) throw Error(Errc::parse, "bad powerset size '" + arg + "'");
    return powerset_family(GroundSet(n));
  }
  return family_from_json(load_json_file(arg));
}

WeightedGraph resolve_graph(std::string arg) {
  if (strip_prefix(arg, "fixture:")) return fixture_graph(arg);
  return graph_from_json(load_json_file(arg));
}

LinkageFunction resolve_linkage(std::string arg, const GroundSet* context) {
  if (strip_prefix(arg, "fixture:")) return fixture_linkage(arg);
  return linkage_from_json(load_json_file(arg), context);
}

SetFunction resolve_function(std::string arg, const SetFamily& family) {
  if (strip_prefix(arg, "fixture:")) {
    SetFunction fx = fixture_set_function(arg);
    return SetFunction(family, fx.entries(), fx.empty_value());
  }
  return set_function_from_json(load_json_file(arg), family);
}

void require_same_ground(const LinkageFunction& pi, const SetFamily& family) {
  if (pi.ground() != family.ground())
    throw Error(Errc::ground_mismatch,
                "linkage and family use different ground sets");
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(Errc::parse, "cannot write '" + out_path + "'");
  file << j.dump(2) << "\n";
}

void print_verdict_line(std::ostream& out, std::string_view name,
                        const Verdict& verdict, const GroundSet& ground) {
  out << name << ": " << (verdict.holds ? "yes" : "no");
  if (verdict.witness) out << "  (" << verdict.witness->describe(ground) << ")";
  out << "\n";
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& family_arg, bool text, std::ostream& out) {
  SetFamily family = resolve_family(family_arg);
  PropertyReport report = analyze(family);
  if (text) {
    print_verdict_line(out, "accessible", report.accessible, family.ground());
    print_verdict_line(out, "up_accessible", report.up_accessible,
                       family.ground());
    print_verdict_line(out, "chain", report.chain, family.ground());
    print_verdict_line(out, "heritage", report.heritage, family.ground());
    print_verdict_line(out, "closure_space", report.closure_space,
                       family.ground());
    print_verdict_line(out, "convex_geometry", report.convex_geometry,
                       family.ground());
  } else {
    out << property_report_to_json(report, family.ground()).dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dualize

int run_dualize(const std::string& family_arg, const std::string& function_arg,
                const std::string& linkage_arg, const std::string& what,
                const std::string& out_path, std::ostream& out) {
  SetFamily family = resolve_family(family_arg);
  if (what == "pi_F" || what == "G_F") {
    if (function_arg.empty())
      throw Error(Errc::parse, "--emit " + what + " needs --function");
    SetFunction f = resolve_function(function_arg, family);
    json j = what == "pi_F"
                 ? linkage_to_json(derive_pi_F(f, family))
                 : set_function_to_json(derive_G_F(f, family));
    emit(j, out_path, out);
    return 0;
  }
  if (what == "F_pi") {
    if (linkage_arg.empty())
      throw Error(Errc::parse, "--emit F_pi needs --linkage");
    LinkageFunction pi = resolve_linkage(linkage_arg, &family.ground());
    require_same_ground(pi, family);
    emit(set_function_to_json(derive_F_pi(pi, family)), out_path, out);
    return 0;
  }
  throw Error(Errc::parse, "--emit must be one of pi_F, G_F, F_pi");
}

// ---------------------------------------------------------------------------
// check

Verdict check_eq9_instance(const SetFamily& family, int trials,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    std::vector<std::vector<ElementSet>> choices;
    for (Element e : extreme_points(family, x))
      choices.push_back(interval(family, e, x));
    for (int t = 0; t < trials; ++t) {
      ElementSet united;
      for (const auto& pool : choices) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        united = united | pool[pick(rng)];
      }
      for (ElementSet z : family.members())
        if (united.subset_of(z) && z.proper_subset_of(x))
          return Verdict::no(Witness{}.add("X", x).add("between", z));
    }
  }
  return Verdict::yes();
}

// Forward directions of thm1/thm2 quantify over every quasi-concave F or
// monotone pi. Exhaust the standard universe when it fits the enumeration
// budget; otherwise fall back to seeded sampling.
Verdict thm1_forward(const SetFamily& family, int samples,
                     std::uint64_t seed) {
  const std::vector<Rational> values{Rational(0), Rational(1), Rational(2)};
  try {
    SetFunctionEnumerator functions(family, values, /*quasiconcave_only=*/true);
    while (auto f = functions.next())
      if (Verdict v = check_theorem1(family, *f); !v.holds) return v;
    return Verdict::yes();
  } catch (const Error& e) {
    if (e.code() != Errc::capacity_exceeded) throw;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<ElementSet> domain;
  for (ElementSet m : family.members())
    if (!m.empty()) domain.push_back(m);
  int found = 0;
  for (int attempt = 0; found < samples && attempt < samples * 50; ++attempt) {
    std::vector<std::pair<ElementSet, Rational>> assignment;
    for (ElementSet m : domain) assignment.emplace_back(m, values[pick(rng)]);
    SetFunction f(family, std::move(assignment));
    if (!is_quasiconcave(f, family).holds) continue;
    ++found;
    if (Verdict v = check_theorem1(family, f); !v.holds) return v;
  }
  return Verdict::yes();
}

Verdict thm2_forward(const SetFamily& family, int samples,
                     std::uint64_t seed) {
  const std::vector<Rational> values{Rational(1), Rational(2)};
  try {
    MonotoneLinkageEnumerator linkages(family.ground(), values);
    while (auto pi = linkages.next())
      if (Verdict v = check_theorem2(family, *pi); !v.holds) return v;
    return Verdict::yes();
  } catch (const Error& e) {
    if (e.code() != Errc::capacity_exceeded) throw;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    LinkageFunction pi = random_monotone_linkage(family.ground(), values, rng);
    if (Verdict v = check_theorem2(family, pi); !v.holds) return v;
  }
  return Verdict::yes();
}

int run_check(const std::string& claim, const std::string& family_arg,
              const std::string& function_arg, const std::string& linkage_arg,
              const std::string& linkage2_arg, int trials, int samples,
              std::uint64_t seed, bool text, std::ostream& out) {
  SetFamily family = resolve_family(family_arg);
  DualityReport report;
  report.instance = family_arg;

  if (claim == "prop1") {
    Verdict direct = has_chain_property(family);
    Verdict complemented = has_chain_property(complement_family(family));
    Verdict agree = Verdict::yes();
    if (direct.holds != complemented.holds)
      agree = Verdict::no(direct.witness     ? *direct.witness
                          : complemented.witness ? *complemented.witness
                                                 : Witness{});
    report.checks.push_back({"prop1", std::move(agree)});
  } else if (claim == "prop3") {
    if (function_arg.empty())
      throw Error(Errc::parse, "check prop3 needs --function");
    SetFunction f = resolve_function(function_arg, family);
    report.checks.push_back(
        {"prop3", is_monotone_linkage(derive_pi_F(f, family))});
  } else if (claim == "prop4") {
    if (function_arg.empty())
      throw Error(Errc::parse, "check prop4 needs --function");
    SetFunction f = resolve_function(function_arg, family);
    SetFunction g = derive_G_F(f, family);
    Verdict v = Verdict::yes();
    for (ElementSet m : family.members())
      if (!m.empty() && g(m) < f(m)) {
        v = Verdict::no(Witness{}.add("set", m));
        break;
      }
    report.checks.push_back({"prop4", std::move(v)});
  } else if (claim == "thm1") {
    if (!is_accessible(family).holds)
      throw Error(Errc::not_accessible, "family is not accessible");
    if (has_chain_property(family).holds) {
      Verdict forward =
          function_arg.empty()
              ? thm1_forward(family, samples, seed)
              : check_theorem1(family, resolve_function(function_arg, family));
      report.checks.push_back({"thm1_forward", std::move(forward)});
    } else {
      SetFunction f = thm1_counterexample(family);
      bool quasi = is_quasiconcave(f, family).holds;
      auto diff = derive_G_F(f, family).first_difference(f);
      Verdict converse =
          quasi && diff ? Verdict::yes()
                        : Verdict::no(Witness{});  // cannot happen
      report.checks.push_back({"thm1_converse", std::move(converse)});
    }
  } else if (claim == "thm2") {
    if (!is_accessible(family).holds)
      throw Error(Errc::not_accessible, "family is not accessible");
    if (has_heritage(family).holds) {
      Verdict forward = Verdict::yes();
      if (!linkage_arg.empty()) {
        LinkageFunction pi = resolve_linkage(linkage_arg, &family.ground());
        require_same_ground(pi, family);
        forward = check_theorem2(family, pi);
      } else {
        forward = thm2_forward(family, samples, seed);
      }
      report.checks.push_back({"thm2_forward", std::move(forward)});
    } else {
      LinkageFunction pi = thm2_counterexample(family);
      bool monotone = is_monotone_linkage(pi).holds;
      bool broken = !is_quasiconcave(derive_F_pi(pi, family), family).holds;
      Verdict converse = monotone && broken ? Verdict::yes()
                                            : Verdict::no(Witness{});
      report.checks.push_back({"thm2_converse", std::move(converse)});
    }
  } else if (claim == "thm3") {
    if (linkage_arg.empty())
      throw Error(Errc::parse, "check thm3 needs --linkage");
    LinkageFunction pi = resolve_linkage(linkage_arg, &family.ground());
    require_same_ground(pi, family);
    report.checks.push_back({"thm3", check_theorem3(family, pi)});
  } else if (claim == "thm4") {
    if (linkage_arg.empty() || linkage2_arg.empty())
      throw Error(Errc::parse, "check thm4 needs --linkage and --linkage2");
    LinkageFunction pi1 = resolve_linkage(linkage_arg, &family.ground());
    LinkageFunction pi2 = resolve_linkage(linkage2_arg, &family.ground());
    require_same_ground(pi1, family);
    require_same_ground(pi2, family);
    report.checks.push_back({"thm4", check_theorem4(family, pi1, pi2)});
  } else if (claim == "eq9") {
    if (!is_accessible(family).holds)
      throw Error(Errc::not_accessible, "family is not accessible");
    if (!has_chain_property(family).holds)
      throw Error(Errc::hypothesis, "family lacks the chain property");
    report.checks.push_back({"eq9", check_eq9_instance(family, trials, seed)});
  } else {
    throw Error(Errc::parse, "unknown claim '" + claim + "'");
  }

  if (text) {
    for (const auto& check : report.checks) {
      out << check.claim << ": "
          << (check.verdict.holds ? "upheld" : "REFUTED");
      if (check.verdict.witness)
        out << "  (" << check.verdict.witness->describe(family.ground())
            << ")";
      out << "\n";
    }
  } else {
    out << duality_report_to_json(report, family.ground()).dump(2) << "\n";
  }
  return report.all_hold() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// maximize

int run_maximize(const std::string& linkage_arg, const std::string& graph_arg,
                 const std::string& kind, bool verify, bool text,
                 std::ostream& out) {
  std::optional<LinkageFunction> pi;
  if (!linkage_arg.empty()) {
    pi = resolve_linkage(linkage_arg, nullptr);
  } else if (!graph_arg.empty()) {
    WeightedGraph graph = resolve_graph(graph_arg);
    if (kind == "degree")
      pi = LinkageFunction::degree(std::move(graph));
    else if (kind == "proximity")
      pi = LinkageFunction::proximity(std::move(graph));
    else
      throw Error(Errc::parse, "--kind must be degree or proximity");
  } else {
    throw Error(Errc::parse, "maximize needs --linkage or --graph");
  }

  PeelingTrace trace = peel(*pi);
  ElementSet best_set = trace.chain[trace.best_index];
  Rational best_value = trace.values[trace.best_index];

  json j = peeling_trace_to_json(trace, pi->ground());
  j["best_set"] = element_set_to_json(best_set, pi->ground());
  j["best_value"] = format_rational(best_value);

  bool agrees = true;
  if (verify) {
    auto [oracle_set, oracle_value] = brute_force_max(
        boolean_min_function(*pi), powerset_family(pi->ground()));
    agrees = oracle_value == best_value;
    j["verify"] = json{{"brute_force_value", format_rational(oracle_value)},
                       {"agrees", agrees}};
  }

  if (text) {
    for (std::size_t i = 0; i < trace.chain.size(); ++i)
      out << to_string(trace.chain[i], pi->ground()) << "  value "
          << format_rational(trace.values[i])
          << (i == trace.best_index ? "  <- best" : "") << "\n";
    out << "best " << to_string(best_set, pi->ground()) << " value "
        << format_rational(best_value) << "\n";
    if (verify)
      out << "brute force " << (agrees ? "agrees" : "DISAGREES") << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return agrees ? 0 : 1;
}

// ---------------------------------------------------------------------------
// enumerate

const std::vector<FamilyProperty>& sweep_hypothesis_filters(
    const std::string& sweep) {
  static const std::vector<FamilyProperty> none;
  static const std::vector<FamilyProperty> accessible{
      FamilyProperty::accessible};
  static const std::vector<FamilyProperty> heritage{
      FamilyProperty::accessible, FamilyProperty::heritage};
  static const std::vector<FamilyProperty> chain{FamilyProperty::accessible,
                                                 FamilyProperty::chain};
  if (sweep == "prop1") return none;
  if (sweep == "eq9") return chain;
  if (sweep == "thm3" || sweep == "thm4") return heritage;
  return accessible;
}

int run_enumerate(int n, const std::vector<std::string>& filter_names,
                  const std::string& sweep, int trials, int samples,
                  std::uint64_t seed, bool text, std::ostream& out) {
  std::vector<FamilyProperty> filters;
  for (const std::string& name : filter_names) {
    auto p = family_property_from_name(name);
    if (!p) throw Error(Errc::parse, "unknown filter '" + name + "'");
    filters.push_back(*p);
  }
  int cap = family_cap();

  if (sweep.empty()) {
    FamilyEnumerator families(n, filters, 0, 1, cap);
    std::uint64_t count = 0;
    while (families.next()) ++count;
    if (text) {
      out << count << " families over " << n << " elements";
      for (FamilyProperty p : filters)
        out << " " << family_property_name(p);
      out << "\n";
      return 0;
    }
    json names = json::array();
    for (FamilyProperty p : filters)
      names.push_back(std::string(family_property_name(p)));
    out << json{{"n", n}, {"filters", names}, {"families", count}}.dump(2)
        << "\n";
    return 0;
  }

  // each sweep fixes its hypothesis filters; extra ones are not meaningful
  const auto& implied = sweep_hypothesis_filters(sweep);
  for (FamilyProperty p : filters)
    if (std::find(implied.begin(), implied.end(), p) == implied.end())
      throw Error(Errc::parse,
                  "sweep '" + sweep + "' fixes its hypothesis filters; '" +
                      std::string(family_property_name(p)) +
                      "' is not one of them");

  SweepReport report;
  if (sweep == "prop1")
    report = sweep_prop1(std::min(n, cap));
  else if (sweep == "prop3")
    report = sweep_prop3(n);
  else if (sweep == "prop4")
    report = sweep_prop4(n);
  else if (sweep == "thm1")
    report = sweep_thm1(n);
  else if (sweep == "thm1_converse")
    report = sweep_thm1_converse(std::min(n, cap));
  else if (sweep == "thm2")
    report = sweep_thm2(n);
  else if (sweep == "thm2_converse")
    report = sweep_thm2_converse(std::min(n, cap));
  else if (sweep == "thm3")
    report = sweep_thm3(n, {Rational(1), Rational(2), Rational(3)}, samples,
                        seed);
  else if (sweep == "thm4")
    report = sweep_thm4(n, {Rational(1), Rational(2), Rational(3)}, samples,
                        seed);
  else if (sweep == "eq9")
    report = sweep_eq9(std::min(n, cap), trials, seed);
  else
    throw Error(Errc::parse, "unknown sweep '" + sweep + "'");

  if (text) {
    out << "sweep " << report.claim << ": " << report.families << " families, "
        << report.instances << " instances, " << report.violations
        << " violations";
    if (!report.first_violation.empty())
      out << "; first: " << report.first_violation;
    out << "\n";
  } else {
    out << sweep_report_to_json(report).dump(2) << "\n";
  }
  return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fixture

int run_fixture(const std::string& name, std::ostream& out) {
  FixtureValue value = fixture(name);
  json j = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SetFamily>) return family_to_json(v);
        if constexpr (std::is_same_v<T, WeightedGraph>)
          return graph_to_json(v);
        if constexpr (std::is_same_v<T, LinkageFunction>)
          return linkage_to_json(v);
        if constexpr (std::is_same_v<T, SetFunction>)
          return json{{"family", family_to_json(v.family())},
                      {"function", set_function_to_json(v)}};
      },
      value);
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"analysis of set systems and the duality between "
               "quasi-concave set functions and monotone linkage functions"};
  app.require_subcommand(1);

  std::string family_arg, function_arg, linkage_arg, linkage2_arg;
  std::string graph_arg, kind = "degree", claim, sweep, emit_what, out_path;
  std::string fixture_name;
  std::vector<std::string> filter_names;
  bool text = false, verify = false;
  int n = 3, trials = 100, samples = 500;
  std::uint64_t seed = 1;

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "report the structural properties of a family");
  analyze_cmd->add_option("family", family_arg,
                          "family file, fixture:<name>, or powerset:<n>")
      ->required();
  analyze_cmd->add_flag("--text", text, "human-readable output");

  auto* dualize_cmd = app.add_subcommand(
      "dualize", "derive pi_F, G_F or F_pi for a family");
  dualize_cmd->add_option("family", family_arg)->required();
  dualize_cmd->add_option("--function", function_arg,
                          "set-function file or fixture:<name>");
  dualize_cmd->add_option("--linkage", linkage_arg,
                          "linkage file or fixture:<name>");
  dualize_cmd->add_option("--emit", emit_what, "pi_F, G_F or F_pi")
      ->required();
  dualize_cmd->add_option("-o,--out", out_path, "write to a file");

  auto* check_cmd = app.add_subcommand(
      "check", "machine-verify a proposition or theorem on an instance");
  check_cmd
      ->add_option("claim", claim,
                   "prop1, prop3, prop4, thm1, thm2, thm3, thm4 or eq9")
      ->required();
  check_cmd->add_option("family", family_arg)->required();
  check_cmd->add_option("--function", function_arg);
  check_cmd->add_option("--linkage", linkage_arg);
  check_cmd->add_option("--linkage2", linkage2_arg);
  check_cmd->add_option("--trials", trials, "random selections for eq9");
  check_cmd->add_option("--samples", samples,
                        "sampled functions/linkages when a forward sweep "
                        "exceeds the enumeration budget");
  check_cmd->add_option("--seed", seed);
  check_cmd->add_flag("--text", text);

  auto* maximize_cmd = app.add_subcommand(
      "maximize", "greedy peeling of a monotone linkage over the Boolean");
  maximize_cmd->add_option("--linkage", linkage_arg);
  maximize_cmd->add_option("--graph", graph_arg);
  maximize_cmd->add_option("--kind", kind, "degree or proximity");
  maximize_cmd->add_flag("--verify", verify, "compare with brute force");
  maximize_cmd->add_flag("--text", text);

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "enumerate small families; optionally sweep a claim");
  enumerate_cmd->add_option("--n", n, "ground-set size")->required();
  enumerate_cmd->add_option("--filters", filter_names,
                            "accessible, up_accessible, chain, heritage, "
                            "closure_space, convex_geometry")
      ->delimiter(',');
  enumerate_cmd->add_option("--sweep", sweep,
                            "prop1, prop3, prop4, thm1, thm1_converse, thm2, "
                            "thm2_converse, thm3, thm4 or eq9");
  enumerate_cmd->add_option("--trials", trials);
  enumerate_cmd->add_option("--samples", samples, "sampled pi per family");
  enumerate_cmd->add_option("--seed", seed);
  enumerate_cmd->add_flag("--text", text);

  auto* fixture_cmd =
      app.add_subcommand("fixture", "print a named fixture as JSON");
  fixture_cmd->add_option("name", fixture_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (analyze_cmd->parsed()) return run_analyze(family_arg, text, out);
    if (dualize_cmd->parsed())
      return run_dualize(family_arg, function_arg, linkage_arg, emit_what,
                         out_path, out);
    if (check_cmd->parsed())
      return run_check(claim, family_arg, function_arg, linkage_arg,
                       linkage2_arg, trials, samples, seed, text, out);
    if (maximize_cmd->parsed())
      return run_maximize(linkage_arg, graph_arg, kind, verify, text, out);
    if (enumerate_cmd->parsed())
      return run_enumerate(n, filter_names, sweep, trials, samples, seed, text,
                           out);
    if (fixture_cmd->parsed()) return run_fixture(fixture_name, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace setlink::cli
