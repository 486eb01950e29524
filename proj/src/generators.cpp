#include "setlink/generators.hpp"

#include <algorithm>
#include <unordered_map>

#include "setlink/properties.hpp"

namespace setlink {

namespace {

ElementSet labeled(std::initializer_list<int> one_based) {
  ElementSet s;
  for (int e : one_based) s = s.with(e - 1);
  return s;
}

SetFamily family_of(int n, std::initializer_list<ElementSet> members) {
  return SetFamily(GroundSet(n), std::vector<ElementSet>(members));
}

WeightedGraph diamond_graph() {
  return WeightedGraph(GroundSet(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

SetFunction bool2_nonqc() {
  SetFamily family = powerset_family(GroundSet(2));
  return SetFunction(family, {{labeled({1}), Rational(1)},
                              {labeled({2}), Rational(1)},
                              {labeled({1, 2}), Rational(0)}});
}

LinkageFunction pi_neq_pi_f() {
  return LinkageFunction::table(GroundSet(2),
                                {{1, labeled({1, 2}), Rational(2)}},
                                Rational(1));
}

constexpr std::string_view kFixtureNames[] = {
    "acc_not_chain", "chain_not_acc", "fig2a",       "fig2b",
    "diamond_graph", "diamond_connected", "bool2_nonqc", "pi_neq_piF",
};

}  // namespace

std::vector<std::string_view> fixture_names() {
  return {std::begin(kFixtureNames), std::end(kFixtureNames)};
}

SetFamily fixture_family(std::string_view name) {
  if (name == "acc_not_chain")
    return family_of(3, {ElementSet{}, labeled({1}), labeled({2}),
                         labeled({2, 3}), labeled({1, 2, 3})});
  if (name == "chain_not_acc")
    return family_of(3, {labeled({1}), labeled({3}), labeled({1, 2}),
                         labeled({2, 3}), labeled({1, 2, 3})});
  if (name == "fig2a")
    return family_of(4, {ElementSet{}, labeled({1}), labeled({2}), labeled({3}),
                         labeled({1, 2}), labeled({2, 4}), labeled({3, 4}),
                         labeled({1, 2, 3}), labeled({1, 2, 3, 4})});
  if (name == "fig2b")
    return family_of(4, {ElementSet{}, labeled({1}), labeled({4}),
                         labeled({1, 3}), labeled({3, 4}), labeled({1, 2, 3}),
                         labeled({2, 3, 4}), labeled({1, 2, 3, 4})});
  if (name == "diamond_connected")
    return connected_subgraph_family(diamond_graph());
  throw Error(Errc::unknown_fixture,
              "'" + std::string(name) + "' is not a family fixture");
}

WeightedGraph fixture_graph(std::string_view name) {
  if (name == "diamond_graph") return diamond_graph();
  throw Error(Errc::unknown_fixture,
              "'" + std::string(name) + "' is not a graph fixture");
}

SetFunction fixture_set_function(std::string_view name) {
  if (name == "bool2_nonqc") return bool2_nonqc();
  throw Error(Errc::unknown_fixture,
              "'" + std::string(name) + "' is not a set-function fixture");
}

LinkageFunction fixture_linkage(std::string_view name) {
  if (name == "pi_neq_piF") return pi_neq_pi_f();
  throw Error(Errc::unknown_fixture,
              "'" + std::string(name) + "' is not a linkage fixture");
}

FixtureValue fixture(std::string_view name) {
  if (name == "diamond_graph") return fixture_graph(name);
  if (name == "bool2_nonqc") return fixture_set_function(name);
  if (name == "pi_neq_piF") return fixture_linkage(name);
  for (std::string_view known : kFixtureNames)
    if (name == known) return fixture_family(name);
  throw Error(Errc::unknown_fixture, "unknown fixture '" + std::string(name) +
                                         "'; try one of acc_not_chain, "
                                         "chain_not_acc, fig2a, fig2b, "
                                         "diamond_graph, diamond_connected, "
                                         "bool2_nonqc, pi_neq_piF");
}

SetFamily connected_subgraph_family(const WeightedGraph& graph) {
  const GroundSet& ground = graph.vertices();
  std::vector<ElementSet> members;
  for (std::uint32_t m = 0; m <= ground.universe().bits(); ++m) {
    ElementSet candidate = ElementSet::from_bits(m);
    if (candidate.empty()) {
      members.push_back(candidate);
      continue;
    }
    ElementSet reached = ElementSet::single(*candidate.begin());
    for (bool grew = true; grew;) {
      grew = false;
      for (Element v : reached) {
        ElementSet more = (graph.neighbors(v) & candidate) - reached;
        if (!more.empty()) {
          reached = reached | more;
          grew = true;
        }
      }
    }
    if (reached == candidate) members.push_back(candidate);
  }
  return SetFamily(ground, std::move(members));
}

bool satisfies(const SetFamily& family, FamilyProperty property) {
  if (family.empty()) return false;
  switch (property) {
    case FamilyProperty::accessible: return is_accessible(family).holds;
    case FamilyProperty::up_accessible: return is_up_accessible(family).holds;
    case FamilyProperty::chain: return has_chain_property(family).holds;
    case FamilyProperty::heritage: return has_heritage(family).holds;
    case FamilyProperty::closure_space: return is_closure_space(family).holds;
    case FamilyProperty::convex_geometry:
      return is_convex_geometry(family).holds;
  }
  throw Error(Errc::internal, "unknown family property");
}

std::optional<FamilyProperty> family_property_from_name(std::string_view name) {
  if (name == "accessible") return FamilyProperty::accessible;
  if (name == "up_accessible") return FamilyProperty::up_accessible;
  if (name == "chain") return FamilyProperty::chain;
  if (name == "heritage") return FamilyProperty::heritage;
  if (name == "closure_space") return FamilyProperty::closure_space;
  if (name == "convex_geometry") return FamilyProperty::convex_geometry;
  return std::nullopt;
}

std::string_view family_property_name(FamilyProperty property) {
  switch (property) {
    case FamilyProperty::accessible: return "accessible";
    case FamilyProperty::up_accessible: return "up_accessible";
    case FamilyProperty::chain: return "chain";
    case FamilyProperty::heritage: return "heritage";
    case FamilyProperty::closure_space: return "closure_space";
    case FamilyProperty::convex_geometry: return "convex_geometry";
  }
  return "?";
}

FamilyEnumerator::FamilyEnumerator(int n, std::vector<FamilyProperty> filters,
                                   std::uint64_t start, std::uint64_t stride,
                                   int max_n)
    : ground_(n), filters_(std::move(filters)), mask_(start), stride_(stride) {
  // beyond n = 5 the 2^(2^n) candidate masks no longer fit an index word
  if (n > max_n || n > 5)
    throw Error(Errc::capacity_exceeded,
                "family enumeration over " + std::to_string(n) +
                    " elements exceeds the cap of " +
                    std::to_string(std::min(max_n, 5)));
  if (stride == 0) throw Error(Errc::invalid, "stride must be positive");
  limit_ = std::uint64_t{1} << (std::uint64_t{1} << n);
}

std::optional<SetFamily> FamilyEnumerator::next() {
  const std::uint32_t subsets = 1u << ground_.size();
  while (mask_ < limit_) {
    std::uint64_t mask = mask_;
    mask_ += stride_;
    std::vector<ElementSet> members;
    for (std::uint32_t s = 0; s < subsets; ++s)
      if ((mask >> s) & 1) members.push_back(ElementSet::from_bits(s));
    SetFamily family(ground_, std::move(members));
    bool keep = true;
    for (FamilyProperty p : filters_)
      if (!satisfies(family, p)) {
        keep = false;
        break;
      }
    if (keep) return family;
  }
  return std::nullopt;
}

namespace {

std::vector<Rational> canonical_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// |values|^slots with a 10^7 ceiling
std::uint64_t universe_size(std::size_t values, std::size_t slots) {
  constexpr std::uint64_t budget = 10'000'000;
  if (slots == 0) return 1;
  if (values == 0) return 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    total *= values;
    if (total > budget)
      throw Error(Errc::capacity_exceeded,
                  "enumeration universe exceeds 10^7 candidates");
  }
  return total;
}

}  // namespace

SetFunctionEnumerator::SetFunctionEnumerator(SetFamily family,
                                             std::vector<Rational> values,
                                             bool quasiconcave_only)
    : family_(std::move(family)),
      values_(canonical_values(std::move(values))),
      quasiconcave_only_(quasiconcave_only) {
  for (ElementSet m : family_.members())
    if (!m.empty()) domain_.push_back(m);
  total_ = universe_size(values_.size(), domain_.size());
}

std::optional<SetFunction> SetFunctionEnumerator::next() {
  while (index_ < total_) {
    std::uint64_t code = index_++;
    std::vector<std::pair<ElementSet, Rational>> assignment;
    assignment.reserve(domain_.size());
    for (ElementSet m : domain_) {
      assignment.emplace_back(m, values_[code % values_.size()]);
      code /= values_.size();
    }
    SetFunction f(family_, std::move(assignment));
    if (!quasiconcave_only_ || is_quasiconcave(f, family_).holds) return f;
  }
  return std::nullopt;
}

MonotoneLinkageEnumerator::MonotoneLinkageEnumerator(
    GroundSet ground, std::vector<Rational> values)
    : ground_(std::move(ground)),
      values_(canonical_values(std::move(values))) {
  for (Element x = 0; x < ground_.size(); ++x)
    for (std::uint32_t m = 0; m <= ground_.universe().bits(); ++m)
      if (ElementSet::from_bits(m).contains(x))
        pairs_.emplace_back(x, ElementSet::from_bits(m));
  total_ = universe_size(values_.size(), pairs_.size());
}

std::optional<LinkageFunction> MonotoneLinkageEnumerator::next() {
  while (index_ < total_) {
    std::uint64_t code = index_++;
    std::vector<LinkageFunction::TableEntry> entries;
    entries.reserve(pairs_.size());
    for (auto [x, set] : pairs_) {
      entries.push_back({x, set, values_[code % values_.size()]});
      code /= values_.size();
    }
    LinkageFunction pi = LinkageFunction::table(ground_, std::move(entries));
    if (is_monotone_linkage(pi).holds) return pi;
  }
  return std::nullopt;
}

LinkageFunction random_monotone_linkage(const GroundSet& ground,
                                        std::span<const Rational> values,
                                        std::mt19937_64& rng) {
  if (values.empty())
    throw Error(Errc::invalid, "need at least one value to draw from");
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::unordered_map<std::uint32_t, Rational> table;
  auto key = [](Element x, ElementSet set) {
    return (static_cast<std::uint32_t>(x) << 16) | set.bits();
  };
  std::vector<LinkageFunction::TableEntry> entries;
  for (Element x = 0; x < ground.size(); ++x) {
    for (std::uint32_t m = 0; m <= ground.universe().bits(); ++m) {
      ElementSet set = ElementSet::from_bits(m);
      if (!set.contains(x)) continue;
      Rational v = values[pick(rng)];
      // close upward: ascending masks guarantee the sub-pairs are done
      for (Element y : set)
        if (y != x) v = std::max(v, table.at(key(x, set.without(y))));
      table.emplace(key(x, set), v);
      entries.push_back({x, set, v});
    }
  }
  return LinkageFunction::table(ground, std::move(entries));
}

}  // namespace setlink
