#include "setlink/functions.hpp"

#include <algorithm>

namespace setlink {

WeightedGraph::WeightedGraph(
    GroundSet vertices, std::vector<std::pair<Element, Element>> edges,
    std::map<std::pair<Element, Element>, Rational> weights)
    : vertices_(std::move(vertices)),
      adjacency_(static_cast<std::size_t>(vertices_.size())) {
  for (auto [a, b] : edges) {
    if (!vertices_.valid(a) || !vertices_.valid(b))
      throw Error(Errc::invalid, "edge endpoint out of range");
    if (a == b)
      throw Error(Errc::invalid,
                  "self-loop at " + vertices_.label(a));
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Errc::invalid, "duplicate edge");
  for (auto [a, b] : edges_) {
    adjacency_[static_cast<std::size_t>(a)] =
        adjacency_[static_cast<std::size_t>(a)].with(b);
    adjacency_[static_cast<std::size_t>(b)] =
        adjacency_[static_cast<std::size_t>(b)].with(a);
  }
  for (auto& [edge, w] : weights) {
    auto [a, b] = edge;
    if (a > b) std::swap(a, b);
    if (!has_edge(a, b))
      throw Error(Errc::invalid, "weight on a missing edge " +
                                     vertices_.label(a) + "-" +
                                     vertices_.label(b));
    weights_.emplace(std::make_pair(a, b), w);
  }
}

bool WeightedGraph::has_edge(Element a, Element b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

Rational WeightedGraph::weight(Element a, Element b) const {
  if (a > b) std::swap(a, b);
  if (!has_edge(a, b)) return Rational(0);
  auto it = weights_.find({a, b});
  return it == weights_.end() ? Rational(1) : it->second;
}

bool WeightedGraph::weights_non_negative() const {
  for (const auto& [edge, w] : weights_)
    if (w < Rational(0)) return false;
  return true;
}

LinkageFunction LinkageFunction::table(GroundSet ground,
                                       std::vector<TableEntry> entries,
                                       std::optional<Rational> fallback) {
  LinkageFunction pi(std::move(ground), Kind::table);
  for (const auto& entry : entries) {
    if (!pi.ground_.valid(entry.x) || !pi.ground_.valid(entry.set))
      throw Error(Errc::invalid, "table entry exceeds the ground set");
    if (!entry.set.contains(entry.x))
      throw Error(Errc::invalid,
                  "table entry has " + pi.ground_.label(entry.x) +
                      " outside " + to_string(entry.set, pi.ground_));
    if (!pi.table_.emplace(key(entry.x, entry.set), entry.value).second)
      throw Error(Errc::invalid, "duplicate table entry");
  }
  pi.fallback_ = std::move(fallback);
  return pi;
}

LinkageFunction LinkageFunction::degree(WeightedGraph graph) {
  LinkageFunction pi(graph.vertices(), Kind::degree);
  pi.graph_ = std::move(graph);
  return pi;
}

LinkageFunction LinkageFunction::proximity(WeightedGraph graph) {
  if (!graph.weights_non_negative())
    throw Error(Errc::invalid, "proximity linkage needs non-negative weights");
  LinkageFunction pi(graph.vertices(), Kind::proximity);
  pi.graph_ = std::move(graph);
  return pi;
}

Rational LinkageFunction::operator()(Element x, ElementSet X) const {
  if (!ground_.valid(x) || !ground_.valid(X))
    throw Error(Errc::invalid, "pair exceeds the ground set");
  if (!X.contains(x))
    throw Error(Errc::element_not_in_set,
                ground_.label(x) + " is not in " + to_string(X, ground_));
  switch (kind_) {
    case Kind::table: {
      auto it = table_.find(key(x, X));
      if (it != table_.end()) return it->second;
      if (fallback_) return *fallback_;
      throw Error(Errc::missing_table_entry,
                  "no value for (" + ground_.label(x) + ", " +
                      to_string(X, ground_) + ")");
    }
    case Kind::degree:
      return Rational((graph_->neighbors(x) & X).size());
    case Kind::proximity: {
      Rational sum(0);
      for (Element j : X)
        if (j != x) sum += graph_->weight(x, j);  // self-weight is 0
      return sum;
    }
  }
  throw Error(Errc::internal, "unknown linkage kind");
}

std::vector<LinkageFunction::TableEntry> LinkageFunction::table_entries()
    const {
  std::vector<TableEntry> out;
  out.reserve(table_.size());
  for (const auto& [k, v] : table_)
    out.push_back({static_cast<Element>(k >> 16),
                   ElementSet::from_bits(k & 0xffffu), v});
  std::sort(out.begin(), out.end(), [](const TableEntry& a, const TableEntry& b) {
    return std::pair(a.x, a.set) < std::pair(b.x, b.set);
  });
  return out;
}

SetFunction::SetFunction(SetFamily family,
                         std::vector<std::pair<ElementSet, Rational>> values,
                         std::optional<Rational> empty_value)
    : family_(std::move(family)), empty_value_(std::move(empty_value)) {
  for (const auto& [set, value] : values) {
    if (set.empty() || !family_.contains(set))
      throw Error(Errc::domain_mismatch,
                  "value assigned to " + to_string(set, family_.ground()) +
                      ", which is not a non-empty member");
    if (!values_.emplace(set.bits(), value).second)
      throw Error(Errc::domain_mismatch,
                  "two values for " + to_string(set, family_.ground()));
  }
  for (ElementSet m : family_.members())
    if (!m.empty() && !values_.contains(m.bits()))
      throw Error(Errc::domain_mismatch,
                  "no value for member " + to_string(m, family_.ground()));
}

const Rational& SetFunction::operator()(ElementSet x) const {
  if (x.empty()) {
    if (empty_value_) return *empty_value_;
    throw Error(Errc::domain_mismatch, "no value for the empty set");
  }
  auto it = values_.find(x.bits());
  if (it == values_.end())
    throw Error(Errc::domain_mismatch,
                "no value for " + to_string(x, family_.ground()));
  return it->second;
}

std::optional<Rational> SetFunction::min_value() const {
  std::optional<Rational> out;
  for (const auto& [bits, value] : values_)
    if (!out || value < *out) out = value;
  return out;
}

std::vector<std::pair<ElementSet, Rational>> SetFunction::entries() const {
  std::vector<std::pair<ElementSet, Rational>> out;
  out.reserve(values_.size());
  for (ElementSet m : family_.members())
    if (!m.empty()) out.emplace_back(m, values_.at(m.bits()));
  return out;
}

bool SetFunction::same_on_members(const SetFunction& other) const {
  return family_ == other.family_ && !first_difference(other);
}

std::optional<ElementSet> SetFunction::first_difference(
    const SetFunction& other) const {
  if (family_ != other.family_)
    throw Error(Errc::domain_mismatch, "functions live on different families");
  for (ElementSet m : family_.members())
    if (!m.empty() && (*this)(m) != other(m)) return m;
  return std::nullopt;
}

SetFunction boolean_min_function(const LinkageFunction& pi) {
  SetFamily family = powerset_family(pi.ground());
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    std::optional<Rational> best;
    for (Element e : x) {
      Rational v = pi(e, x);
      if (!best || v < *best) best = v;
    }
    values.emplace_back(x, *best);
  }
  return SetFunction(std::move(family), std::move(values));
}

LinkageFunction meet_linkage(const LinkageFunction& a,
                             const LinkageFunction& b) {
  if (a.ground() != b.ground())
    throw Error(Errc::ground_mismatch, "meet of linkages over different grounds");
  const ElementSet universe = a.ground().universe();
  std::vector<LinkageFunction::TableEntry> entries;
  for (Element x = 0; x < a.ground().size(); ++x)
    for (std::uint32_t m = 0; m <= universe.bits(); ++m) {
      ElementSet X = ElementSet::from_bits(m);
      if (!X.contains(x)) continue;
      entries.push_back({x, X, std::min(a(x, X), b(x, X))});
    }
  return LinkageFunction::table(a.ground(), std::move(entries));
}

}  // namespace setlink
