#include "setlink/duality.hpp"

#include <algorithm>

namespace setlink {

namespace {

void require_same_family(const SetFunction& f, const SetFamily& family) {
  if (f.family() != family)
    throw Error(Errc::domain_mismatch,
                "function is defined on a different family");
}

void require_same_ground(const LinkageFunction& pi, const SetFamily& family) {
  if (pi.ground() != family.ground())
    throw Error(Errc::ground_mismatch,
                "linkage and family use different ground sets");
}

void require_accessible(const SetFamily& family) {
  if (!is_accessible(family).holds)
    throw Error(Errc::not_accessible, "family is not accessible");
}

bool has_nonempty_member(const SetFamily& family) {
  return !family.empty() && !family.members().back().empty();
}

}  // namespace

LinkageFunction derive_pi_F(const SetFunction& f, const SetFamily& family) {
  require_same_family(f, family);
  std::optional<Rational> fallback = f.min_value();
  if (!fallback)
    throw Error(Errc::domain_mismatch,
                "pi_F needs at least one non-empty member");
  const ElementSet universe = family.universe();
  std::vector<LinkageFunction::TableEntry> entries;
  for (Element x = 0; x < family.ground().size(); ++x) {
    for (std::uint32_t m = 0; m <= universe.bits(); ++m) {
      ElementSet big = ElementSet::from_bits(m);
      if (!big.contains(x)) continue;
      std::optional<Rational> best;
      for (ElementSet a : family.members())
        if (a.contains(x) && a.subset_of(big)) {
          Rational v = f(a);
          if (!best || v > *best) best = v;
        }
      if (best) entries.push_back({x, big, *best});
    }
  }
  return LinkageFunction::table(family.ground(), std::move(entries),
                                *fallback);
}

SetFunction derive_G_F(const SetFunction& f, const SetFamily& family) {
  require_same_family(f, family);
  require_accessible(family);
  if (!has_nonempty_member(family)) return SetFunction(family, {});
  LinkageFunction pi_f = derive_pi_F(f, family);
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    std::optional<Rational> best;
    for (Element e : extreme_points(family, x)) {
      Rational v = pi_f(e, x);
      if (!best || v < *best) best = v;
    }
    values.emplace_back(x, *best);
  }
  return SetFunction(family, std::move(values));
}

SetFunction derive_F_pi(const LinkageFunction& pi, const SetFamily& family) {
  require_same_ground(pi, family);
  require_accessible(family);
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    std::optional<Rational> best;
    for (Element e : extreme_points(family, x)) {
      Rational v = pi(e, x);
      if (!best || v < *best) best = v;
    }
    values.emplace_back(x, *best);
  }
  // empty-set extension: global minimum of pi over all pairs x in X
  std::optional<Rational> global;
  const ElementSet universe = family.universe();
  for (Element x = 0; x < family.ground().size(); ++x)
    for (std::uint32_t m = 0; m <= universe.bits(); ++m) {
      ElementSet big = ElementSet::from_bits(m);
      if (!big.contains(x)) continue;
      Rational v = pi(x, big);
      if (!global || v < *global) global = v;
    }
  return SetFunction(family, std::move(values), global);
}

Verdict check_theorem1(const SetFamily& family, const SetFunction& f) {
  require_same_family(f, family);
  require_accessible(family);
  if (!is_quasiconcave(f, family).holds)
    throw Error(Errc::not_quasiconcave, "F is not quasi-concave");
  SetFunction g = derive_G_F(f, family);
  if (auto diff = g.first_difference(f))
    return Verdict::no(Witness{}.add("set", *diff));
  return Verdict::yes();
}

SetFunction thm1_counterexample(const SetFamily& family) {
  require_accessible(family);
  Verdict chain = has_chain_property(family);
  if (chain.holds)
    throw Error(Errc::chain_holds, "family satisfies the chain property");
  ElementSet a = *chain.witness->set("X");
  if (a.empty())
    throw Error(Errc::internal,
                "chain violation with empty inner set on an accessible family");
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet m : family.members())
    if (!m.empty()) values.emplace_back(m, Rational(m == a ? 1 : 0));
  return SetFunction(family, std::move(values));
}

Verdict check_theorem2(const SetFamily& family, const LinkageFunction& pi) {
  require_same_ground(pi, family);
  require_accessible(family);
  if (!is_monotone_linkage(pi).holds)
    throw Error(Errc::not_monotone, "pi is not a monotone linkage");
  return is_quasiconcave(derive_F_pi(pi, family), family);
}

LinkageFunction thm2_counterexample(const SetFamily& family) {
  require_accessible(family);
  Verdict heritage = has_heritage(family);
  if (heritage.holds)
    throw Error(Errc::heritage_holds, "extreme-point operator has heritage");
  Element a = *heritage.witness->element("a");
  // pi(x, .) = 1 when x = a, 2 otherwise
  const ElementSet universe = family.universe();
  std::vector<LinkageFunction::TableEntry> entries;
  for (std::uint32_t m = 0; m <= universe.bits(); ++m) {
    ElementSet big = ElementSet::from_bits(m);
    if (big.contains(a)) entries.push_back({a, big, Rational(1)});
  }
  return LinkageFunction::table(family.ground(), std::move(entries),
                                Rational(2));
}

Verdict check_theorem3(const SetFamily& family, const LinkageFunction& pi) {
  require_same_ground(pi, family);
  require_accessible(family);
  if (!has_heritage(family).holds)
    throw Error(Errc::hypothesis, "extreme-point operator lacks heritage");
  if (!is_monotone_linkage(pi).holds)
    throw Error(Errc::not_monotone, "pi is not a monotone linkage");
  SetFunction f = derive_F_pi(pi, family);
  LinkageFunction pi_f = derive_pi_F(f, family);
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    for (Element e : extreme_points(family, x))
      if (pi_f(e, x) > pi(e, x))
        return Verdict::no(Witness{}.add("set", x).add("x", e));
  }
  return Verdict::yes();
}

Verdict check_theorem4(const SetFamily& family, const LinkageFunction& pi1,
                       const LinkageFunction& pi2) {
  require_same_ground(pi1, family);
  require_same_ground(pi2, family);
  require_accessible(family);
  if (!is_monotone_linkage(pi1).holds || !is_monotone_linkage(pi2).holds)
    throw Error(Errc::not_monotone, "both linkages must be monotone");
  SetFunction f1 = derive_F_pi(pi1, family);
  SetFunction f2 = derive_F_pi(pi2, family);
  if (auto diff = f1.first_difference(f2))
    throw Error(Errc::hypothesis,
                "linkages define different functions, first at " +
                    to_string(*diff, family.ground()));
  SetFunction meet_f = derive_F_pi(meet_linkage(pi1, pi2), family);
  if (auto diff = meet_f.first_difference(f1))
    return Verdict::no(Witness{}.add("set", *diff));
  return Verdict::yes();
}

bool DualityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DualityCheck& c) { return c.verdict.holds; });
}

}  // namespace setlink
