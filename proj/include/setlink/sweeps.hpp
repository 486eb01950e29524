#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setlink/core.hpp"

namespace setlink {

/// Tally of one exhaustive claim sweep: how many families were enumerated,
/// how many (family, function/linkage/trial) instances were checked, how many
/// violated the claim, and a description of the first violation.
struct SweepReport {
  std::string claim;
  int n = 0;
  std::uint64_t families = 0;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
};

/// Chain property is invariant under complementation, over every non-empty
/// family on up to max_n elements.
SweepReport sweep_prop1(int max_n = 4);

/// pi_F is monotone for every F on every accessible family.
SweepReport sweep_prop3(int n = 3, std::vector<Rational> values = {Rational(0),
                                                                   Rational(1)});

/// G_F >= F pointwise for every F on every accessible family.
SweepReport sweep_prop4(int n = 3, std::vector<Rational> values = {Rational(0),
                                                                   Rational(1)});

/// Biconditional: over each accessible family, G_F = F for every
/// quasi-concave F drawn from the value set exactly when the family has the
/// chain property.
SweepReport sweep_thm1(int n = 3,
                       std::vector<Rational> values = {Rational(0), Rational(1),
                                                       Rational(2)});

/// On every accessible family lacking the chain property, the constructed
/// indicator is quasi-concave with G_F != F.
SweepReport sweep_thm1_converse(int max_n = 4);

/// Biconditional: over each accessible family, F_pi is quasi-concave for
/// every monotone {1,2}-valued table exactly when heritage holds.
SweepReport sweep_thm2(int n = 3);

/// On every accessible family violating heritage, the constructed two-valued
/// linkage is monotone with a non-quasi-concave F_pi.
SweepReport sweep_thm2_converse(int max_n = 4);

/// pi_F <= pi on the pairs (x in ex(X), X member), for sampled monotone pi
/// over accessible heritage families.
SweepReport sweep_thm3(int n = 3,
                       std::vector<Rational> values = {Rational(1), Rational(2),
                                                       Rational(3)},
                       int samples_per_family = 500, std::uint64_t seed = 1);

/// meet(pi, pi_F) defines F_pi again, for sampled monotone pi over accessible
/// heritage families.
SweepReport sweep_thm4(int n = 3,
                       std::vector<Rational> values = {Rational(1), Rational(2),
                                                       Rational(3)},
                       int samples_per_family = 500, std::uint64_t seed = 1);

/// On accessible chain families, X is a cover of the union of any selection
/// B^x from the intervals [x, X] over x in ex(X); selections randomized.
SweepReport sweep_eq9(int max_n = 4, int trials = 100, std::uint64_t seed = 1);

/// On accessible heritage families, G_F is quasi-concave for every F drawn
/// from the value set.
SweepReport sweep_gf_quasiconcave(int n = 3,
                                  std::vector<Rational> values = {
                                      Rational(0), Rational(1), Rational(2)});

}  // namespace setlink
