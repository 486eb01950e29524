#include "setlink/properties.hpp"

#include <unordered_map>

#include "setlink/functions.hpp"

namespace setlink {

const ElementSet* Witness::set(std::string_view role) const {
  for (const auto& [name, s] : sets)
    if (name == role) return &s;
  return nullptr;
}

const Element* Witness::element(std::string_view role) const {
  for (const auto& [name, e] : elements)
    if (name == role) return &e;
  return nullptr;
}

std::string Witness::describe(const GroundSet& ground) const {
  std::string out;
  for (const auto& [name, s] : sets) {
    if (!out.empty()) out += ", ";
    out += name + "=" + to_string(s, ground);
  }
  for (const auto& [name, e] : elements) {
    if (!out.empty()) out += ", ";
    out += name + "=" + ground.label(e);
  }
  return out;
}

namespace {

void require_non_empty(const SetFamily& family, const char* op) {
  if (family.empty())
    throw Error(Errc::empty_family, std::string(op) + " on an empty family");
}

}  // namespace

Verdict is_accessible(const SetFamily& family) {
  require_non_empty(family, "is_accessible");
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    if (extreme_points(family, x).empty())
      return Verdict::no(Witness{}.add("set", x));
  }
  return Verdict::yes();
}

Verdict is_up_accessible(const SetFamily& family) {
  require_non_empty(family, "is_up_accessible");
  Verdict direct = Verdict::yes();
  for (ElementSet x : family.members()) {
    if (x == family.universe()) continue;
    bool extendable = false;
    for (Element e : family.universe() - x)
      if (family.contains(x.with(e))) {
        extendable = true;
        break;
      }
    if (!extendable) {
      direct = Verdict::no(Witness{}.add("set", x));
      break;
    }
  }
  Verdict dual = is_accessible(complement_family(family));
  if (direct.holds != dual.holds)
    throw Error(Errc::internal, "up-accessibility routes disagree");
  return direct;
}

Verdict has_chain_property(const SetFamily& family) {
  require_non_empty(family, "has_chain_property");
  const auto& ms = family.members();
  Verdict down = Verdict::yes();
  for (ElementSet x : ms) {
    for (ElementSet y : ms) {
      if (!x.proper_subset_of(y)) continue;
      bool step = false;
      for (Element e : y - x)
        if (family.contains(y.without(e))) {
          step = true;
          break;
        }
      if (!step) {
        down = Verdict::no(Witness{}.add("X", x).add("Y", y));
        break;
      }
    }
    if (!down.holds) break;
  }
  bool up_ok = true;
  for (ElementSet x : ms) {
    for (ElementSet y : ms) {
      if (!x.proper_subset_of(y)) continue;
      bool step = false;
      for (Element e : y - x)
        if (family.contains(x.with(e))) {
          step = true;
          break;
        }
      if (!step) {
        up_ok = false;
        break;
      }
    }
    if (!up_ok) break;
  }
  if (down.holds != up_ok)
    throw Error(Errc::internal, "chain property forms disagree");
  return down;
}

Verdict has_heritage(const SetFamily& family) {
  require_non_empty(family, "has_heritage");
  const auto& ms = family.members();
  Verdict result = Verdict::yes();
  for (ElementSet x : ms) {
    ElementSet ex_x = extreme_points(family, x);
    for (ElementSet y : ms) {
      if (!x.subset_of(y)) continue;
      ElementSet bad = (extreme_points(family, y) & x) - ex_x;
      if (!bad.empty()) {
        result = Verdict::no(
            Witness{}.add("X", x).add("Y", y).add("a", *bad.begin()));
        break;
      }
    }
    if (!result.holds) break;
  }
  // Unfolded form: y removable from Y implies y removable from X.
  bool unfolded = true;
  for (ElementSet x : ms) {
    for (ElementSet y : ms) {
      if (!x.subset_of(y)) continue;
      for (Element e : x)
        if (family.contains(y.without(e)) && !family.contains(x.without(e))) {
          unfolded = false;
          break;
        }
      if (!unfolded) break;
    }
    if (!unfolded) break;
  }
  if (result.holds != unfolded)
    throw Error(Errc::internal, "heritage forms disagree");
  return result;
}

Verdict is_closure_space(const SetFamily& family) {
  if (!family.contains(ElementSet{}))
    return Verdict::no(Witness{}.add("missing", ElementSet{}));
  if (!family.contains(family.universe()))
    return Verdict::no(Witness{}.add("missing", family.universe()));
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!family.contains(ms[i] & ms[j]))
        return Verdict::no(Witness{}.add("X", ms[i]).add("Y", ms[j]));
  return Verdict::yes();
}

Verdict is_convex_geometry(const SetFamily& family) {
  Verdict space = is_closure_space(family);
  bool definitional = space.holds && is_up_accessible(family).holds;

  bool bounds = family.contains(ElementSet{}) &&
                family.contains(family.universe());
  bool characterization = bounds && has_chain_property(family).holds &&
                          has_heritage(family).holds;

  if (definitional != characterization)
    throw Error(Errc::internal, "convex-geometry routes disagree");
  if (definitional) return Verdict::yes();
  if (!space.holds) return space;
  return is_up_accessible(family);
}

Verdict is_monotone_linkage(const LinkageFunction& pi) {
  const GroundSet& ground = pi.ground();
  const ElementSet universe = ground.universe();
  for (Element x = 0; x < ground.size(); ++x) {
    for (std::uint32_t m = 0; m <= universe.bits(); ++m) {
      ElementSet X = ElementSet::from_bits(m);
      if (!X.contains(x)) continue;
      Rational base = pi(x, X);
      for (Element y : universe - X)
        if (base > pi(x, X.with(y)))
          return Verdict::no(Witness{}.add("set", X).add("x", x).add("y", y));
    }
  }
  return Verdict::yes();
}

Verdict is_quasiconcave(const SetFunction& f, const SetFamily& family) {
  if (f.family() != family)
    throw Error(Errc::domain_mismatch,
                "function is defined on a different family");
  // covers of each distinct union, memoized for this evaluation only
  std::unordered_map<std::uint32_t, std::vector<ElementSet>> cover_memo;
  auto covers_of = [&](ElementSet u) -> const std::vector<ElementSet>& {
    auto it = cover_memo.find(u.bits());
    if (it == cover_memo.end())
      it = cover_memo.emplace(u.bits(), covers(family, u)).first;
    return it->second;
  };
  const auto& ms = family.members();
  for (ElementSet x : ms) {
    if (x.empty()) continue;
    for (ElementSet y : ms) {
      if (y < x || y.empty()) continue;
      Rational bound = std::min(f(x), f(y));
      for (ElementSet z : covers_of(x | y))
        if (f(z) < bound)
          return Verdict::no(Witness{}.add("X", x).add("Y", y).add("Z", z));
    }
  }
  return Verdict::yes();
}

PropertyReport analyze(const SetFamily& family) {
  PropertyReport report;
  report.accessible = is_accessible(family);
  report.up_accessible = is_up_accessible(family);
  report.chain = has_chain_property(family);
  report.heritage = has_heritage(family);
  report.closure_space = is_closure_space(family);
  report.convex_geometry = is_convex_geometry(family);
  return report;
}

}  // namespace setlink
