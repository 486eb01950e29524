#include "setlink/optimize.hpp"

#include "setlink/properties.hpp"

namespace setlink {

std::pair<ElementSet, Rational> brute_force_max(const SetFunction& f,
                                                const SetFamily& family) {
  if (f.family() != family)
    throw Error(Errc::domain_mismatch,
                "function is defined on a different family");
  std::optional<std::pair<ElementSet, Rational>> best;
  for (ElementSet x : family.members()) {
    if (x.empty()) continue;
    Rational v = f(x);
    if (!best || v > best->second) best = {x, v};
  }
  if (!best)
    throw Error(Errc::empty_domain, "family has no non-empty member");
  return *best;
}

PeelingTrace peel(const LinkageFunction& pi) {
  if (Verdict m = is_monotone_linkage(pi); !m.holds)
    throw Error(Errc::not_monotone,
                "peeling requires a monotone linkage; violated at " +
                    m.witness->describe(pi.ground()));
  PeelingTrace trace;
  ElementSet current = pi.ground().universe();
  while (true) {
    Element argmin = -1;
    std::optional<Rational> best;
    for (Element x : current) {
      Rational v = pi(x, current);
      if (!best || v < *best) {  // ties keep the smallest element
        best = v;
        argmin = x;
      }
    }
    trace.chain.push_back(current);
    trace.values.push_back(*best);
    if (current.size() == 1) break;
    trace.removed.push_back(argmin);
    current = current.without(argmin);
  }
  for (std::size_t i = 1; i < trace.values.size(); ++i)
    if (trace.values[i] > trace.values[trace.best_index]) trace.best_index = i;
  return trace;
}

std::pair<ElementSet, Rational> maximize_boolean(const LinkageFunction& pi) {
  PeelingTrace trace = peel(pi);
  return {trace.chain[trace.best_index], trace.values[trace.best_index]};
}

}  // namespace setlink
