#include "setlink/sweeps.hpp"

#include <random>

#include "setlink/duality.hpp"
#include "setlink/generators.hpp"
#include "setlink/properties.hpp"

namespace setlink {

namespace {

std::string family_text(const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  for (ElementSet m : family.members()) {
    if (!first) out += ",";
    out += to_string(m, family.ground());
    first = false;
  }
  return out + "}";
}

SweepReport make_report(std::string claim, int n) {
  SweepReport report;
  report.claim = std::move(claim);
  report.n = n;
  return report;
}

void record(SweepReport& report, const std::string& what) {
  ++report.violations;
  if (report.first_violation.empty()) report.first_violation = what;
}

bool has_nonempty_member(const SetFamily& family) {
  return !family.empty() && !family.members().back().empty();
}

}  // namespace

SweepReport sweep_prop1(int max_n) {
  SweepReport report = make_report("prop1", max_n);
  for (int n = 1; n <= max_n; ++n) {
    FamilyEnumerator families(n, {}, 0, 1, max_n);
    while (auto family = families.next()) {
      if (family->empty()) continue;  // chain property needs a member
      ++report.families;
      ++report.instances;
      bool direct = has_chain_property(*family).holds;
      bool complemented = has_chain_property(complement_family(*family)).holds;
      if (direct != complemented)
        record(report, "chain verdict changes under complement on " +
                           family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_prop3(int n, std::vector<Rational> values) {
  SweepReport report = make_report("prop3", n);
  FamilyEnumerator families(n, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    if (!has_nonempty_member(*family)) continue;  // pi_F needs a value to take
    ++report.families;
    SetFunctionEnumerator functions(*family, values);
    while (auto f = functions.next()) {
      ++report.instances;
      if (!is_monotone_linkage(derive_pi_F(*f, *family)).holds)
        record(report, "pi_F not monotone on " + family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_prop4(int n, std::vector<Rational> values) {
  SweepReport report = make_report("prop4", n);
  FamilyEnumerator families(n, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    if (!has_nonempty_member(*family)) continue;
    ++report.families;
    SetFunctionEnumerator functions(*family, values);
    while (auto f = functions.next()) {
      ++report.instances;
      SetFunction g = derive_G_F(*f, *family);
      for (ElementSet m : family->members())
        if (!m.empty() && g(m) < (*f)(m)) {
          record(report, "G_F < F at " + to_string(m, family->ground()) +
                             " on " + family_text(*family));
          break;
        }
    }
  }
  return report;
}

SweepReport sweep_thm1(int n, std::vector<Rational> values) {
  SweepReport report = make_report("thm1", n);
  FamilyEnumerator families(n, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    ++report.families;
    bool chain = has_chain_property(*family).holds;
    bool all_equal = true;
    SetFunctionEnumerator functions(*family, values, /*quasiconcave_only=*/true);
    while (auto f = functions.next()) {
      ++report.instances;
      if (derive_G_F(*f, *family).first_difference(*f)) {
        all_equal = false;
        break;
      }
    }
    if (all_equal != chain)
      record(report, std::string(chain ? "chain family with G_F != F"
                                       : "non-chain family with G_F = F "
                                         "throughout") +
                         ": " + family_text(*family));
  }
  return report;
}

SweepReport sweep_thm1_converse(int max_n) {
  SweepReport report = make_report("thm1_converse", max_n);
  for (int n = 1; n <= max_n; ++n) {
    FamilyEnumerator families(n, {FamilyProperty::accessible}, 0, 1, max_n);
    while (auto family = families.next()) {
      if (has_chain_property(*family).holds) continue;
      ++report.families;
      ++report.instances;
      SetFunction f = thm1_counterexample(*family);
      if (!is_quasiconcave(f, *family).holds) {
        record(report, "counterexample not quasi-concave on " +
                           family_text(*family));
        continue;
      }
      if (check_theorem1(*family, f).holds)
        record(report, "counterexample has G_F = F on " + family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_thm2(int n) {
  SweepReport report = make_report("thm2", n);
  FamilyEnumerator families(n, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    ++report.families;
    bool heritage = has_heritage(*family).holds;
    bool all_quasiconcave = true;
    MonotoneLinkageEnumerator linkages(family->ground(),
                                       {Rational(1), Rational(2)});
    while (auto pi = linkages.next()) {
      ++report.instances;
      if (!is_quasiconcave(derive_F_pi(*pi, *family), *family).holds) {
        all_quasiconcave = false;
        break;
      }
    }
    if (all_quasiconcave != heritage)
      record(report,
             std::string(heritage ? "heritage family with non-quasi-concave "
                                    "F_pi"
                                  : "non-heritage family where every F_pi is "
                                    "quasi-concave") +
                 ": " + family_text(*family));
  }
  return report;
}

SweepReport sweep_thm2_converse(int max_n) {
  SweepReport report = make_report("thm2_converse", max_n);
  for (int n = 1; n <= max_n; ++n) {
    FamilyEnumerator families(n, {FamilyProperty::accessible}, 0, 1, max_n);
    while (auto family = families.next()) {
      if (has_heritage(*family).holds) continue;
      ++report.families;
      ++report.instances;
      LinkageFunction pi = thm2_counterexample(*family);
      if (!is_monotone_linkage(pi).holds) {
        record(report,
               "counterexample linkage not monotone on " + family_text(*family));
        continue;
      }
      if (is_quasiconcave(derive_F_pi(pi, *family), *family).holds)
        record(report, "counterexample F_pi still quasi-concave on " +
                           family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_thm3(int n, std::vector<Rational> values,
                       int samples_per_family, std::uint64_t seed) {
  SweepReport report = make_report("thm3", n);
  std::mt19937_64 rng(seed);
  FamilyEnumerator families(
      n, {FamilyProperty::accessible, FamilyProperty::heritage});
  while (auto family = families.next()) {
    if (!has_nonempty_member(*family)) continue;
    ++report.families;
    for (int s = 0; s < samples_per_family; ++s) {
      ++report.instances;
      LinkageFunction pi =
          random_monotone_linkage(family->ground(), values, rng);
      Verdict v = check_theorem3(*family, pi);
      if (!v.holds)
        record(report, "pi_F > pi at " +
                           v.witness->describe(family->ground()) + " on " +
                           family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_thm4(int n, std::vector<Rational> values,
                       int samples_per_family, std::uint64_t seed) {
  SweepReport report = make_report("thm4", n);
  std::mt19937_64 rng(seed);
  FamilyEnumerator families(
      n, {FamilyProperty::accessible, FamilyProperty::heritage});
  while (auto family = families.next()) {
    if (!has_nonempty_member(*family)) continue;
    ++report.families;
    for (int s = 0; s < samples_per_family; ++s) {
      ++report.instances;
      LinkageFunction pi =
          random_monotone_linkage(family->ground(), values, rng);
      SetFunction f = derive_F_pi(pi, *family);
      LinkageFunction pi_f = derive_pi_F(f, *family);
      SetFunction meet_f = derive_F_pi(meet_linkage(pi, pi_f), *family);
      if (auto diff = meet_f.first_difference(f))
        record(report, "meet(pi, pi_F) changes F_pi at " +
                           to_string(*diff, family->ground()) + " on " +
                           family_text(*family));
    }
  }
  return report;
}

SweepReport sweep_eq9(int max_n, int trials, std::uint64_t seed) {
  SweepReport report = make_report("eq9", max_n);
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    FamilyEnumerator families(
        n, {FamilyProperty::accessible, FamilyProperty::chain}, 0, 1, max_n);
    while (auto family = families.next()) {
      ++report.families;
      for (ElementSet x : family->members()) {
        if (x.empty()) continue;
        std::vector<std::vector<ElementSet>> choices;
        for (Element e : extreme_points(*family, x))
          choices.push_back(interval(*family, e, x));  // holds x, never empty
        for (int t = 0; t < trials; ++t) {
          ++report.instances;
          ElementSet united;
          for (const auto& pool : choices) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            united = united | pool[pick(rng)];
          }
          // X covers the union: no member strictly between them
          bool minimal = true;
          for (ElementSet z : family->members())
            if (united.subset_of(z) && z.proper_subset_of(x)) {
              minimal = false;
              break;
            }
          if (!minimal)
            record(report, to_string(x, family->ground()) +
                               " is not a cover of its selection union on " +
                               family_text(*family));
        }
      }
    }
  }
  return report;
}

SweepReport sweep_gf_quasiconcave(int n, std::vector<Rational> values) {
  SweepReport report = make_report("gf_quasiconcave", n);
  FamilyEnumerator families(
      n, {FamilyProperty::accessible, FamilyProperty::heritage});
  while (auto family = families.next()) {
    if (!has_nonempty_member(*family)) continue;
    ++report.families;
    SetFunctionEnumerator functions(*family, values);
    while (auto f = functions.next()) {
      ++report.instances;
      if (!is_quasiconcave(derive_G_F(*f, *family), *family).holds)
        record(report, "G_F not quasi-concave on " + family_text(*family));
    }
  }
  return report;
}

}  // namespace setlink
