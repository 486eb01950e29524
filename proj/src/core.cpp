#include "setlink/core.hpp"

#include <algorithm>
#include <charconv>

namespace setlink {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid: return "Invalid";
    case Errc::parse: return "ParseError";
    case Errc::not_feasible: return "NotFeasible";
    case Errc::not_closure_space: return "NotClosureSpace";
    case Errc::empty_family: return "EmptyFamily";
    case Errc::empty_domain: return "EmptyDomain";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::ground_mismatch: return "GroundMismatch";
    case Errc::element_not_in_set: return "ElementNotInSet";
    case Errc::missing_table_entry: return "MissingTableEntry";
    case Errc::not_accessible: return "NotAccessible";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::not_quasiconcave: return "NotQuasiConcave";
    case Errc::chain_holds: return "ChainHolds";
    case Errc::heritage_holds: return "HeritageHolds";
    case Errc::hypothesis: return "HypothesisFailed";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::capacity_exceeded: return "CapacityExceeded";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  long long num = 0, den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num))
      throw Error(Errc::parse, "bad rational '" + std::string(text) + "'");
  } else {
    if (!parse_int(text.substr(0, slash), num) ||
        !parse_int(text.substr(slash + 1), den) || den <= 0)
      throw Error(Errc::parse, "bad rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::string s = std::to_string(value.numerator());
  if (value.denominator() != 1)
    s += "/" + std::to_string(value.denominator());
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Element e : *this) out.push_back(e);
  return out;
}

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 1 || size > max_size)
    throw Error(Errc::invalid, "ground set size " + std::to_string(size) +
                                   " outside 1.." + std::to_string(max_size));
}

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : GroundSet(size) {
  if (static_cast<int>(labels.size()) != size)
    throw Error(Errc::invalid, "label count does not match ground size");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::invalid, "duplicate ground-set label");
  labels_ = std::move(labels);
}

std::string GroundSet::label(Element e) const {
  if (!valid(e))
    throw Error(Errc::invalid, "element " + std::to_string(e) + " out of range");
  if (labels_) return (*labels_)[static_cast<std::size_t>(e)];
  return std::to_string(e + 1);
}

std::optional<Element> GroundSet::element_by_label(
    std::string_view name) const {
  if (!labels_) return std::nullopt;
  for (Element e = 0; e < size_; ++e)
    if ((*labels_)[static_cast<std::size_t>(e)] == name) return e;
  return std::nullopt;
}

std::string to_string(ElementSet s, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ",";
    out += ground.label(e);
    first = false;
  }
  return out + "}";
}

SetFamily::SetFamily(GroundSet ground, std::vector<ElementSet> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(Errc::invalid, "duplicate family member");
  for (ElementSet m : members_)
    if (!ground_.valid(m))
      throw Error(Errc::invalid,
                  "member " + to_string(m, ground_) + " exceeds the ground set");
}

bool SetFamily::contains(ElementSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

SetFamily powerset_family(const GroundSet& ground) {
  std::vector<ElementSet> members;
  members.reserve(std::size_t{1} << ground.size());
  for (std::uint32_t m = 0; m <= ground.universe().bits(); ++m)
    members.push_back(ElementSet::from_bits(m));
  return SetFamily(ground, std::move(members));
}

ElementSet extreme_points(const SetFamily& family, ElementSet x) {
  if (!family.contains(x))
    throw Error(Errc::not_feasible,
                to_string(x, family.ground()) + " is not a member");
  ElementSet out;
  for (Element e : x)
    if (family.contains(x.without(e))) out = out.with(e);
  return out;
}

std::vector<ElementSet> covers(const SetFamily& family, ElementSet x) {
  std::vector<ElementSet> supersets;
  for (ElementSet a : family.members())
    if (x.subset_of(a)) supersets.push_back(a);
  std::vector<ElementSet> out;
  for (ElementSet a : supersets) {
    bool minimal = true;
    for (ElementSet b : supersets)
      if (b.proper_subset_of(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;  // members() is sorted, so this is canonical order
}

std::vector<ElementSet> interval(const SetFamily& family, Element x,
                                 ElementSet X) {
  if (!family.ground().valid(x))
    throw Error(Errc::invalid, "element " + std::to_string(x) + " out of range");
  std::vector<ElementSet> out;
  for (ElementSet a : family.members())
    if (a.contains(x) && a.subset_of(X)) out.push_back(a);
  return out;
}

SetFamily complement_family(const SetFamily& family) {
  std::vector<ElementSet> members;
  members.reserve(family.size());
  for (ElementSet m : family.members())
    members.push_back(family.universe() - m);
  return SetFamily(family.ground(), std::move(members));
}

ElementSet closure(const SetFamily& family, ElementSet a) {
  if (!family.ground().valid(a))
    throw Error(Errc::invalid, "set exceeds the ground set");
  bool axioms = family.contains(ElementSet{}) &&
                family.contains(family.universe());
  if (axioms) {
    const auto& ms = family.members();
    for (std::size_t i = 0; i < ms.size() && axioms; ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (!family.contains(ms[i] & ms[j])) {
          axioms = false;
          break;
        }
  }
  if (!axioms)
    throw Error(Errc::not_closure_space,
                "closure is only defined on closure spaces");
  ElementSet out = family.universe();
  for (ElementSet m : family.members())
    if (a.subset_of(m)) out = out & m;
  return out;
}

}  // namespace setlink
