#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setlink/core.hpp"

namespace setlink {

/// Undirected graph over a ground set of vertices. Edge weights default to 1;
/// absent edges weigh 0.
class WeightedGraph {
 public:
  WeightedGraph(GroundSet vertices, std::vector<std::pair<Element, Element>> edges,
                std::map<std::pair<Element, Element>, Rational> weights = {});

  const GroundSet& vertices() const { return vertices_; }
  const std::vector<std::pair<Element, Element>>& edges() const {
    return edges_;
  }
  const std::map<std::pair<Element, Element>, Rational>& explicit_weights()
      const {
    return weights_;
  }

  bool has_edge(Element a, Element b) const;
  Rational weight(Element a, Element b) const;
  ElementSet neighbors(Element v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  bool weights_non_negative() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  GroundSet vertices_;
  std::vector<std::pair<Element, Element>> edges_;  // normalized a < b, sorted
  std::map<std::pair<Element, Element>, Rational> weights_;
  std::vector<ElementSet> adjacency_;
};

/// A linkage function pi(x, X), defined for every x in X over the ground set.
/// Either an explicit table (optionally with a default value for unlisted
/// pairs), the degree of x in the subgraph induced by X, or the total
/// similarity weight between x and X.
class LinkageFunction {
 public:
  enum class Kind { table, degree, proximity };

  struct TableEntry {
    Element x;
    ElementSet set;
    Rational value;
  };

  static LinkageFunction table(GroundSet ground, std::vector<TableEntry> entries,
                               std::optional<Rational> fallback = {});
  static LinkageFunction degree(WeightedGraph graph);
  /// Requires non-negative weights; those keep the function monotone.
  static LinkageFunction proximity(WeightedGraph graph);

  Kind kind() const { return kind_; }
  const GroundSet& ground() const { return ground_; }

  Rational operator()(Element x, ElementSet X) const;

  /// Table rows in canonical (x, set) order. Empty for graph-backed kinds.
  std::vector<TableEntry> table_entries() const;
  const std::optional<Rational>& fallback() const { return fallback_; }
  const WeightedGraph* graph() const {
    return graph_ ? &*graph_ : nullptr;
  }

 private:
  LinkageFunction(GroundSet ground, Kind kind)
      : ground_(std::move(ground)), kind_(kind) {}

  static std::uint32_t key(Element x, ElementSet X) {
    return (static_cast<std::uint32_t>(x) << 16) | X.bits();
  }

  GroundSet ground_;
  Kind kind_;
  std::unordered_map<std::uint32_t, Rational> table_;
  std::optional<Rational> fallback_;
  std::optional<WeightedGraph> graph_;
};

/// Exact-valued set function on the non-empty members of a family, with an
/// optional value for the empty set.
class SetFunction {
 public:
  SetFunction(SetFamily family, std::vector<std::pair<ElementSet, Rational>> values,
              std::optional<Rational> empty_value = {});

  const SetFamily& family() const { return family_; }
  const std::optional<Rational>& empty_value() const { return empty_value_; }

  /// Fails loudly on non-members; the empty set is served by empty_value.
  const Rational& operator()(ElementSet x) const;

  /// Minimum over the non-empty members; nullopt when there are none.
  std::optional<Rational> min_value() const;

  /// Values in canonical member order (the empty extension not included).
  std::vector<std::pair<ElementSet, Rational>> entries() const;

  /// Same family and pointwise-equal on the non-empty members; the empty
  /// extension is not compared.
  bool same_on_members(const SetFunction& other) const;

  /// First non-empty member where the two differ, in canonical order.
  std::optional<ElementSet> first_difference(const SetFunction& other) const;

 private:
  SetFamily family_;
  std::unordered_map<std::uint32_t, Rational> values_;
  std::optional<Rational> empty_value_;
};

/// F(X) = min over x in X of pi(x, X), on every non-empty subset of the
/// ground set (the family is the full Boolean).
SetFunction boolean_min_function(const LinkageFunction& pi);

/// Pointwise minimum of two linkages on the same ground set, materialized as
/// a table. Monotone whenever both inputs are.
LinkageFunction meet_linkage(const LinkageFunction& a, const LinkageFunction& b);

}  // namespace setlink
