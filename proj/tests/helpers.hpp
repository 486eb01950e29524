#pragma once

#include <initializer_list>
#include <vector>

#include "setlink/core.hpp"

namespace setlink::test {

// Sets written with 1-based labels, the way the worked examples read.
inline ElementSet S(std::initializer_list<int> one_based) {
  ElementSet s;
  for (int e : one_based) s = s.with(e - 1);
  return s;
}

inline SetFamily make_family(
    int n, std::initializer_list<std::initializer_list<int>> members) {
  std::vector<ElementSet> ms;
  for (auto m : members) ms.push_back(S(m));
  return SetFamily(GroundSet(n), std::move(ms));
}

}  // namespace setlink::test
