#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setlink/core.hpp"

namespace setlink {

class LinkageFunction;
class SetFunction;

/// Counterexample certificate: role-named sets plus role-named elements,
/// e.g. {"X": {1,3}, "Y": {1,2,3,4}} with element "a" = 1.
struct Witness {
  std::vector<std::pair<std::string, ElementSet>> sets;
  std::vector<std::pair<std::string, Element>> elements;

  Witness& add(std::string role, ElementSet s) {
    sets.emplace_back(std::move(role), s);
    return *this;
  }
  Witness& add(std::string role, Element e) {
    elements.emplace_back(std::move(role), e);
    return *this;
  }
  const ElementSet* set(std::string_view role) const;
  const Element* element(std::string_view role) const;

  std::string describe(const GroundSet& ground) const;
};

/// A property verdict. False verdicts always carry a concrete witness; true
/// verdicts never do.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
};

/// Every non-empty member has a removable element staying feasible.
/// Witness: the stuck member.
Verdict is_accessible(const SetFamily& family);

/// Every member other than E has an addable element staying feasible.
/// Computed both directly and as accessibility of the complement system; the
/// two routes must agree.
Verdict is_up_accessible(const SetFamily& family);

/// Between any nested pair of members there is a one-element removal staying
/// feasible. The one-element-addition form is evaluated as well; as universal
/// properties the two are equivalent and the checker insists on it.
/// Witness: the first offending pair (X, Y) in canonical order.
Verdict has_chain_property(const SetFamily& family);

/// ex(Y) /\ X is contained in ex(X) for all nested members X inside Y.
/// Witness: (X, Y, a) with a extreme in Y, inside X, not extreme in X.
Verdict has_heritage(const SetFamily& family);

/// Empty set and E are members and members are closed under pairwise
/// intersection. Witness: the missing bound or the offending pair.
Verdict is_closure_space(const SetFamily& family);

/// Closure space + up-accessibility, cross-checked against the
/// characterization (bounds + chain property + heritage). Disagreement of the
/// two routes is an internal error.
Verdict is_convex_geometry(const SetFamily& family);

/// pi(x, X) <= pi(x, X + y) for every x in X and y outside X; single-element
/// extensions suffice by transitivity. Witness: (x, X, y).
Verdict is_monotone_linkage(const LinkageFunction& pi);

/// F(Z) >= min(F(X), F(Y)) for all non-empty members X, Y and every cover Z
/// of their union; unions without feasible supersets impose no constraint.
/// Witness: (X, Y, Z).
Verdict is_quasiconcave(const SetFunction& f, const SetFamily& family);

struct PropertyReport {
  Verdict accessible;
  Verdict up_accessible;
  Verdict chain;
  Verdict heritage;
  Verdict closure_space;
  Verdict convex_geometry;
};

PropertyReport analyze(const SetFamily& family);

}  // namespace setlink
