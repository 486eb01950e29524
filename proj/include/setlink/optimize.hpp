#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "setlink/functions.hpp"

namespace setlink {

/// Record of one greedy peel on the full ground set: the descending chain of
/// sets, the element removed at each step, the value min over x of pi(x, X)
/// per chain set, and the index of the first chain set attaining the best
/// value. For a monotone pi the chain always contains a global maximizer of
/// that value over all non-empty subsets.
struct PeelingTrace {
  std::vector<ElementSet> chain;   // |E| sets, from E down to a singleton
  std::vector<Element> removed;    // |E| - 1 removals
  std::vector<Rational> values;
  std::size_t best_index = 0;
};

/// Exhaustive maximum of F over the non-empty members; ties go to the
/// canonically smallest member. The oracle every optimization claim is
/// checked against.
std::pair<ElementSet, Rational> brute_force_max(const SetFunction& f,
                                                const SetFamily& family);

/// Greedy peeling: starting from E, repeatedly drop the argmin of pi(., X),
/// ties to the smallest element. Refuses non-monotone linkages.
PeelingTrace peel(const LinkageFunction& pi);

/// The best chain set of the peel and its value; equals the brute-force
/// maximum of the Boolean min-function in value.
std::pair<ElementSet, Rational> maximize_boolean(const LinkageFunction& pi);

}  // namespace setlink
