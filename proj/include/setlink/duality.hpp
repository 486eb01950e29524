#pragma once

#include <string>
#include <vector>

#include "setlink/functions.hpp"
#include "setlink/properties.hpp"

namespace setlink {

/// The linkage induced by a set function F:
///   pi_F(x, X) = max of F over the members A with x in A inside X,
/// and the minimum of F over the non-empty members when no such A exists.
/// Materialized as a table whose default is that fallback minimum. Always
/// monotone.
LinkageFunction derive_pi_F(const SetFunction& f, const SetFamily& family);

/// The round trip G_F(X) = min over x in ex(X) of pi_F(x, X), on the
/// non-empty members. Needs an accessible family so ex(X) is never empty.
/// G_F >= F pointwise; equality on every quasi-concave F characterizes the
/// chain property.
SetFunction derive_G_F(const SetFunction& f, const SetFamily& family);

/// The linkage-defined function F_pi(X) = min over x in ex(X) of pi(x, X) on
/// the non-empty members; the empty set gets the global minimum of pi over
/// all pairs (x, X) with x in X.
SetFunction derive_F_pi(const LinkageFunction& pi, const SetFamily& family);

/// Pointwise equality of G_F and F. Refuses unless the family is accessible
/// and F is quasi-concave. Witness: the first differing member.
Verdict check_theorem1(const SetFamily& family, const SetFunction& f);

/// For an accessible family without the chain property: the indicator of the
/// inner set of the first chain-violating pair (A, B). The result is
/// quasi-concave with G_F(B) = 1 != 0 = F(B).
SetFunction thm1_counterexample(const SetFamily& family);

/// Quasi-concavity of F_pi for the given monotone pi on an accessible
/// family. Heritage families pass for every monotone pi; that is the
/// characterization.
Verdict check_theorem2(const SetFamily& family, const LinkageFunction& pi);

/// For an accessible family whose extreme-point operator violates heritage:
/// the two-valued linkage that is 1 on the violating element and 2 elsewhere.
/// It is monotone and its F_pi is not quasi-concave.
LinkageFunction thm2_counterexample(const SetFamily& family);

/// pi_F(x, X) <= pi(x, X) for all members X and x in ex(X), where
/// F = F_pi. Hypotheses: accessible, heritage, pi monotone.
Verdict check_theorem3(const SetFamily& family, const LinkageFunction& pi);

/// min(pi1, pi2) defines the same function as pi1 and pi2 do. Hypotheses:
/// accessible family, both monotone, both defining the same F_pi on the
/// non-empty members.
Verdict check_theorem4(const SetFamily& family, const LinkageFunction& pi1,
                       const LinkageFunction& pi2);

struct DualityCheck {
  std::string claim;
  Verdict verdict;
};

struct DualityReport {
  std::string instance;
  std::vector<DualityCheck> checks;

  bool all_hold() const;
};

}  // namespace setlink
