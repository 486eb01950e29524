#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace setlink {

// ---------------------------------------------------------------------------
// Errors

enum class Errc {
  invalid,            // constructor contract violated
  parse,              // malformed input file / text
  not_feasible,       // set is not a member of the family
  not_closure_space,  // closure requested on a family violating the axioms
  empty_family,
  empty_domain,
  domain_mismatch,    // function not total on the family, or family mismatch
  ground_mismatch,
  element_not_in_set,
  missing_table_entry,
  not_accessible,
  not_monotone,
  not_quasiconcave,
  chain_holds,        // counterexample requested but the chain property holds
  heritage_holds,     // counterexample requested but heritage holds
  hypothesis,         // some other stated hypothesis fails
  unknown_fixture,
  capacity_exceeded,
  internal,           // a machine-verified identity failed; must never fire
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// ---------------------------------------------------------------------------
// Exact values
//
// Every value in this library is an exact rational, so min/max/argmin
// comparisons are deterministic and ties are detectable.

using Rational = boost::rational<long long>;

/// Parses "p", "-p" or "p/q" (q positive). Throws Errc::parse otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

// ---------------------------------------------------------------------------
// Ground set and subsets

/// 0-based index of a ground-set element. Rendered 1-based (or by label) in
/// all I/O.
using Element = int;

/// A subset of the ground set as a characteristic bit vector. The integer
/// value of the bits is the canonical order used everywhere in the library.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint32_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet single(Element e) { return from_bits(1u << e); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  constexpr ElementSet with(Element e) const { return from_bits(bits_ | (1u << e)); }
  constexpr ElementSet without(Element e) const {
    return from_bits(bits_ & ~(1u << e));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }

  friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    Element operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> elements() const;

 private:
  std::uint32_t bits_ = 0;
};

/// The finite ground set: a size of at most 16 plus optional display labels.
/// Sixteen elements keep any subset in one machine word and full Boolean
/// enumeration at desk scale.
class GroundSet {
 public:
  static constexpr int max_size = 16;

  explicit GroundSet(int size);
  GroundSet(int size, std::vector<std::string> labels);

  int size() const { return size_; }
  ElementSet universe() const {
    return ElementSet::from_bits((1u << size_) - 1u);
  }
  bool valid(ElementSet s) const { return s.subset_of(universe()); }
  bool valid(Element e) const { return e >= 0 && e < size_; }

  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }
  /// The element's label, or its 1-based index in decimal.
  std::string label(Element e) const;
  std::optional<Element> element_by_label(std::string_view name) const;

  bool operator==(const GroundSet&) const = default;

 private:
  int size_;
  std::optional<std::vector<std::string>> labels_;
};

/// "{1,3}" using the ground set's labels.
std::string to_string(ElementSet s, const GroundSet& ground);

/// A set system (E, F): members deduplicated and kept in canonical ascending
/// order; membership tests are binary searches.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<ElementSet> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<ElementSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  ElementSet universe() const { return ground_.universe(); }
  bool contains(ElementSet s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  GroundSet ground_;
  std::vector<ElementSet> members_;
};

SetFamily powerset_family(const GroundSet& ground);

// ---------------------------------------------------------------------------
// Primitive operators on set systems

/// ex(X) = {x in X : X - x is a member}. X itself must be a member.
ElementSet extreme_points(const SetFamily& family, ElementSet x);

/// All inclusion-minimal members containing X, in canonical order. X need not
/// be a member; when it is, the result is exactly [X].
std::vector<ElementSet> covers(const SetFamily& family, ElementSet x);

/// [x, X] = members A with x in A and A inside X, in canonical order.
std::vector<ElementSet> interval(const SetFamily& family, Element x,
                                 ElementSet X);

/// {E - X : X member}. An involution.
SetFamily complement_family(const SetFamily& family);

/// Intersection of all members containing A. Only defined on closure spaces
/// (empty set and E present, members closed under pairwise intersection);
/// refuses otherwise rather than returning a non-member.
ElementSet closure(const SetFamily& family, ElementSet a);

}  // namespace setlink
