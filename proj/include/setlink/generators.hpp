#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "setlink/functions.hpp"

namespace setlink {

// ---------------------------------------------------------------------------
// Worked fixtures
//
// Small named objects used throughout the tests and runnable from the CLI by
// name: two three-element systems separating accessibility from the chain
// property, the two four-element systems separating heritage and chain from
// closure spaces, the 4-cycle graph with its connected-subgraph system, a
// non-quasi-concave Boolean function, and a linkage whose induced pi_F is
// strictly below it.

using FixtureValue =
    std::variant<SetFamily, SetFunction, LinkageFunction, WeightedGraph>;

FixtureValue fixture(std::string_view name);  // Errc::unknown_fixture
std::vector<std::string_view> fixture_names();

SetFamily fixture_family(std::string_view name);
WeightedGraph fixture_graph(std::string_view name);
SetFunction fixture_set_function(std::string_view name);
LinkageFunction fixture_linkage(std::string_view name);

/// All vertex subsets inducing connected subgraphs, including the empty set
/// and every singleton.
SetFamily connected_subgraph_family(const WeightedGraph& graph);

// ---------------------------------------------------------------------------
// Exhaustive universes for theorem sweeps

enum class FamilyProperty {
  accessible,
  up_accessible,
  chain,
  heritage,
  closure_space,
  convex_geometry,
};

/// Filter form of the property checkers; the empty family satisfies none.
bool satisfies(const SetFamily& family, FamilyProperty property);
std::optional<FamilyProperty> family_property_from_name(std::string_view name);
std::string_view family_property_name(FamilyProperty property);

/// Every set family over an n-element ground set, in canonical order (the
/// family's characteristic mask over the 2^n subsets, ascending), restricted
/// to those passing all filters. start/stride shard the candidate masks for
/// parallel sweeps.
class FamilyEnumerator {
 public:
  static constexpr int default_max_n = 4;

  explicit FamilyEnumerator(int n, std::vector<FamilyProperty> filters = {},
                            std::uint64_t start = 0, std::uint64_t stride = 1,
                            int max_n = default_max_n);

  std::optional<SetFamily> next();
  std::uint64_t total_candidates() const { return limit_; }

 private:
  GroundSet ground_;
  std::vector<FamilyProperty> filters_;
  std::uint64_t mask_;
  std::uint64_t stride_;
  std::uint64_t limit_;
};

/// Every assignment of the given values to the non-empty members, in
/// canonical order; optionally only the quasi-concave ones. Values are
/// deduplicated and sorted. Refuses universes beyond 10^7 candidates.
class SetFunctionEnumerator {
 public:
  SetFunctionEnumerator(SetFamily family, std::vector<Rational> values,
                        bool quasiconcave_only = false);

  std::optional<SetFunction> next();
  std::uint64_t total_candidates() const { return total_; }

 private:
  SetFamily family_;
  std::vector<Rational> values_;
  std::vector<ElementSet> domain_;
  bool quasiconcave_only_;
  std::uint64_t index_ = 0;
  std::uint64_t total_;
};

/// Every total table on the pairs (x, X with x in X) with entries from the
/// given values, filtered to the monotone ones, in canonical order. Refuses
/// universes beyond 10^7 candidates.
class MonotoneLinkageEnumerator {
 public:
  MonotoneLinkageEnumerator(GroundSet ground, std::vector<Rational> values);

  std::optional<LinkageFunction> next();
  std::uint64_t total_candidates() const { return total_; }

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
  std::vector<std::pair<Element, ElementSet>> pairs_;
  std::uint64_t index_ = 0;
  std::uint64_t total_;
};

/// A random monotone table linkage with entries drawn from the given values:
/// raw uniform draws closed upward by maximizing over contained pairs.
/// Reaches every monotone table over those values.
LinkageFunction random_monotone_linkage(const GroundSet& ground,
                                        std::span<const Rational> values,
                                        std::mt19937_64& rng);

}  // namespace setlink
