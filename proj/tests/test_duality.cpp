#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "setlink/duality.hpp"
#include "setlink/generators.hpp"
#include "setlink/sweeps.hpp"

using namespace setlink;
using setlink::test::S;
using setlink::test::make_family;

namespace {

SetFunction indicator_of(const SetFamily& family, ElementSet target) {
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet m : family.members())
    if (!m.empty()) values.emplace_back(m, Rational(m == target ? 1 : 0));
  return SetFunction(family, std::move(values));
}

SetFunction constant(const SetFamily& family, Rational c) {
  std::vector<std::pair<ElementSet, Rational>> values;
  for (ElementSet m : family.members())
    if (!m.empty()) values.emplace_back(m, c);
  return SetFunction(family, std::move(values));
}

// definitional evaluation of pi_F for one pair, kept separate from the
// table-materializing implementation it cross-checks
Rational naive_pi_F(const SetFunction& f, const SetFamily& family, Element x,
                    ElementSet big) {
  std::optional<Rational> best;
  for (ElementSet a : interval(family, x, big)) {
    Rational v = f(a);
    if (!best || v > *best) best = v;
  }
  if (best) return *best;
  return *f.min_value();
}

}  // namespace

TEST_CASE("pi_F on the accessible non-chain fixture") {
  SetFamily anc = fixture_family("acc_not_chain");
  SetFunction f = indicator_of(anc, S({1}));
  LinkageFunction pi_f = derive_pi_F(f, anc);
  CHECK(pi_f(0, S({1, 2, 3})) == Rational(1));
  CHECK(pi_f(2, S({3})) == Rational(0));  // empty interval takes min F
  CHECK(pi_f(1, S({2})) == Rational(0));
  CHECK(pi_f(1, S({1, 2})) == Rational(0));
}

TEST_CASE("pi_F of a constant is that constant") {
  SetFamily anc = fixture_family("acc_not_chain");
  LinkageFunction pi_f = derive_pi_F(constant(anc, Rational(7)), anc);
  for (Element x = 0; x < 3; ++x)
    for (std::uint32_t m = 0; m < 8; ++m) {
      ElementSet set = ElementSet::from_bits(m);
      if (set.contains(x)) CHECK(pi_f(x, set) == Rational(7));
    }
}

TEST_CASE("pi_F table agrees with the definitional evaluation") {
  for (const char* name : {"acc_not_chain", "fig2a", "fig2b"}) {
    SetFamily family = fixture_family(name);
    SetFunction f = indicator_of(family, family.members().back());
    LinkageFunction pi_f = derive_pi_F(f, family);
    for (Element x = 0; x < family.ground().size(); ++x)
      for (std::uint32_t m = 0; m <= family.universe().bits(); ++m) {
        ElementSet set = ElementSet::from_bits(m);
        if (set.contains(x))
          CHECK(pi_f(x, set) == naive_pi_F(f, family, x, set));
      }
  }
}

TEST_CASE("pi_F is monotone for every {0,1} function at n=2") {
  FamilyEnumerator families(2, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    if (family->size() <= 1) continue;  // only the empty member
    SetFunctionEnumerator functions(*family, {Rational(0), Rational(1)});
    while (auto f = functions.next())
      CHECK(is_monotone_linkage(derive_pi_F(*f, *family)).holds);
  }
}

TEST_CASE("G_F on the worked instances") {
  SetFamily anc = fixture_family("acc_not_chain");
  SetFunction f = indicator_of(anc, S({1}));
  SetFunction g = derive_G_F(f, anc);
  CHECK(g(S({1, 2, 3})) == Rational(1));
  CHECK(f(S({1, 2, 3})) == Rational(0));
  CHECK(g(S({1})) == Rational(1));

  SetFunction nonqc = fixture_set_function("bool2_nonqc");
  SetFunction g2 = derive_G_F(nonqc, nonqc.family());
  CHECK(g2(S({1, 2})) == Rational(1));
  CHECK(nonqc(S({1, 2})) == Rational(0));

  CHECK_THROWS_AS(derive_G_F(indicator_of(fixture_family("chain_not_acc"),
                                          S({1})),
                             fixture_family("chain_not_acc")),
                  Error);
}

TEST_CASE("G_F >= F on every {0,1} function over accessible families, n=2") {
  FamilyEnumerator families(2, {FamilyProperty::accessible});
  while (auto family = families.next()) {
    if (family->size() <= 1) continue;
    SetFunctionEnumerator functions(*family, {Rational(0), Rational(1)});
    while (auto f = functions.next()) {
      SetFunction g = derive_G_F(*f, *family);
      for (ElementSet m : family->members())
        if (!m.empty()) CHECK(g(m) >= (*f)(m));
    }
  }
}

TEST_CASE("F_pi on fig2b with the two-valued linkage") {
  SetFamily fig2b = fixture_family("fig2b");
  LinkageFunction pi = thm2_counterexample(fig2b);  // 1 iff x = element 1
  SetFunction f = derive_F_pi(pi, fig2b);
  CHECK(f(S({1, 2, 3, 4})) == Rational(1));
  CHECK(f(S({1, 3})) == Rational(2));
  CHECK(f(S({2, 3, 4})) == Rational(2));
  CHECK(f(S({1})) == Rational(1));
  CHECK(f.empty_value() == Rational(1));  // global minimum over all pairs
}

TEST_CASE("F_pi via the degree linkage on the connected-subgraph system") {
  SetFamily diamond = fixture_family("diamond_connected");
  LinkageFunction deg = LinkageFunction::degree(fixture_graph("diamond_graph"));
  SetFunction f = derive_F_pi(deg, diamond);
  CHECK(f(S({1, 2, 3})) == Rational(1));
  CHECK(f(S({1, 2, 3, 4})) == Rational(2));
  CHECK(f(S({2})) == Rational(0));  // singleton member: pi(x, {x})
  CHECK(f.empty_value() == Rational(0));
}

TEST_CASE("theorem 1 equality verdict") {
  SetFamily anc = fixture_family("acc_not_chain");
  Verdict unequal = check_theorem1(anc, indicator_of(anc, S({1})));
  CHECK(!unequal.holds);
  CHECK(*unequal.witness->set("set") == S({1, 2, 3}));

  CHECK(check_theorem1(anc, constant(anc, Rational(3))).holds);

  // accessible chain system: equality for every quasi-concave {0,1} function
  SetFamily chain = make_family(3, {{}, {1}, {1, 2}, {1, 2, 3}});
  SetFunctionEnumerator functions(chain, {Rational(0), Rational(1)},
                                  /*quasiconcave_only=*/true);
  while (auto f = functions.next()) CHECK(check_theorem1(chain, *f).holds);

  CHECK_THROWS_AS(check_theorem1(anc, fixture_set_function("bool2_nonqc")),
                  Error);  // family mismatch
  SetFunction nonqc = fixture_set_function("bool2_nonqc");
  try {
    check_theorem1(nonqc.family(), nonqc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_quasiconcave);
  }
}

TEST_CASE("theorem 1 counterexample construction") {
  SetFamily anc = fixture_family("acc_not_chain");
  SetFunction f = thm1_counterexample(anc);
  CHECK(f(S({1})) == Rational(1));
  CHECK(f(S({2})) == Rational(0));
  CHECK(f(S({1, 2, 3})) == Rational(0));
  CHECK(is_quasiconcave(f, anc).holds);
  CHECK(!check_theorem1(anc, f).holds);

  SetFamily fig2a = fixture_family("fig2a");
  SetFunction g = thm1_counterexample(fig2a);
  CHECK(g(S({3})) == Rational(1));  // canonical first chain violation
  CHECK(is_quasiconcave(g, fig2a).holds);

  CHECK_THROWS_AS(thm1_counterexample(fixture_family("diamond_connected")),
                  Error);
  try {
    thm1_counterexample(fixture_family("diamond_connected"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::chain_holds);
  }
}

TEST_CASE("theorem 2 verdicts") {
  SetFamily fig2b = fixture_family("fig2b");
  LinkageFunction pi = thm2_counterexample(fig2b);
  Verdict v = check_theorem2(fig2b, pi);
  CHECK(!v.holds);
  // canonical scan finds ({1,3}, {4}) first; the proof's pair also violates
  CHECK(*v.witness->set("X") == S({1, 3}));
  CHECK(*v.witness->set("Y") == S({4}));
  CHECK(*v.witness->set("Z") == S({1, 2, 3, 4}));
  SetFunction f = derive_F_pi(pi, fig2b);
  CHECK(f(S({1, 2, 3, 4})) <
        std::min(f(S({1, 3})), f(S({2, 3, 4}))));  // the proof-shaped pair

  SetFamily fig2a = fixture_family("fig2a");
  std::mt19937_64 rng(3);
  std::vector<Rational> values{Rational(1), Rational(2), Rational(3)};
  for (int trial = 0; trial < 40; ++trial)
    CHECK(check_theorem2(fig2a,
                         random_monotone_linkage(fig2a.ground(), values, rng))
              .holds);

  LinkageFunction constant_pi =
      LinkageFunction::table(fig2b.ground(), {}, Rational(4));
  CHECK(check_theorem2(fig2b, constant_pi).holds);
}

TEST_CASE("theorem 2 counterexample construction") {
  SetFamily fig2b = fixture_family("fig2b");
  LinkageFunction pi = thm2_counterexample(fig2b);
  CHECK(pi(0, S({1})) == Rational(1));
  CHECK(pi(0, S({1, 2, 3, 4})) == Rational(1));
  CHECK(pi(1, S({1, 2})) == Rational(2));
  CHECK(is_monotone_linkage(pi).holds);

  SetFamily diamond = fixture_family("diamond_connected");
  LinkageFunction pi2 = thm2_counterexample(diamond);
  CHECK(pi2(1, S({1, 2})) == Rational(1));  // keyed on the witness element 2
  CHECK(pi2(0, S({1, 2})) == Rational(2));
  CHECK(!is_quasiconcave(derive_F_pi(pi2, diamond), diamond).holds);

  CHECK_THROWS_AS(thm2_counterexample(powerset_family(GroundSet(2))), Error);
  try {
    thm2_counterexample(powerset_family(GroundSet(2)));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::heritage_holds);
  }
}

TEST_CASE("theorem 3 bound") {
  // pi_F stays below pi on extreme-point pairs, and can be strictly below
  SetFamily booleans = powerset_family(GroundSet(2));
  LinkageFunction pi = fixture_linkage("pi_neq_piF");
  CHECK(check_theorem3(booleans, pi).holds);
  SetFunction f = derive_F_pi(pi, booleans);
  LinkageFunction pi_f = derive_pi_F(f, booleans);
  CHECK(pi_f(1, S({1, 2})) == Rational(1));
  CHECK(pi(1, S({1, 2})) == Rational(2));

  SetFamily fig2a = fixture_family("fig2a");
  std::mt19937_64 rng(5);
  std::vector<Rational> values{Rational(1), Rational(2), Rational(3)};
  for (int trial = 0; trial < 40; ++trial)
    CHECK(check_theorem3(fig2a,
                         random_monotone_linkage(fig2a.ground(), values, rng))
              .holds);

  // hypothesis refusal: fig2b lacks heritage
  CHECK_THROWS_AS(check_theorem3(fixture_family("fig2b"),
                                 thm2_counterexample(fixture_family("fig2b"))),
                  Error);

  // a constant pi induces itself back on every checked pair
  LinkageFunction constant_pi =
      LinkageFunction::table(fig2a.ground(), {}, Rational(5));
  SetFunction cf = derive_F_pi(constant_pi, fig2a);
  LinkageFunction cpi_f = derive_pi_F(cf, fig2a);
  for (ElementSet x : fig2a.members()) {
    if (x.empty()) continue;
    for (Element e : extreme_points(fig2a, x))
      CHECK(cpi_f(e, x) == constant_pi(e, x));
  }
}

TEST_CASE("theorem 4 meet") {
  SetFamily fig2a = fixture_family("fig2a");
  LinkageFunction constant_pi =
      LinkageFunction::table(fig2a.ground(), {}, Rational(2));
  CHECK(check_theorem4(fig2a, constant_pi, constant_pi).holds);

  // meet with the induced pi_F keeps the function (the semilattice null)
  std::mt19937_64 rng(9);
  std::vector<Rational> values{Rational(1), Rational(2), Rational(3)};
  for (int trial = 0; trial < 25; ++trial) {
    LinkageFunction pi = random_monotone_linkage(fig2a.ground(), values, rng);
    SetFunction f = derive_F_pi(pi, fig2a);
    LinkageFunction pi_f = derive_pi_F(f, fig2a);
    CHECK(check_theorem4(fig2a, pi, pi_f).holds);
  }

  // hypothesis refusal: linkages defining different functions
  LinkageFunction one = LinkageFunction::table(fig2a.ground(), {}, Rational(1));
  try {
    check_theorem4(fig2a, one, constant_pi);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis);
  }
}

TEST_CASE("meets of distinct linkages that induce the same function") {
  // random search for qualifying pairs, then the meet must keep the function
  SetFamily anc = fixture_family("acc_not_chain");
  std::mt19937_64 rng(19);
  std::vector<Rational> values{Rational(1), Rational(2)};
  std::map<std::vector<Rational>, std::vector<LinkageFunction>> by_function;
  for (int draw = 0; draw < 60; ++draw) {
    LinkageFunction pi = random_monotone_linkage(anc.ground(), values, rng);
    std::vector<Rational> signature;
    for (const auto& [set, value] : derive_F_pi(pi, anc).entries())
      signature.push_back(value);
    by_function[signature].push_back(pi);
  }
  int pairs_checked = 0;
  for (const auto& [signature, linkages] : by_function)
    for (std::size_t i = 0; i + 1 < linkages.size() && pairs_checked < 12; ++i) {
      CHECK(check_theorem4(anc, linkages[i], linkages[i + 1]).holds);
      ++pairs_checked;
    }
  CHECK(pairs_checked >= 3);  // collisions are plentiful on a 4-member family
}

TEST_CASE("G_F is quasi-concave on accessible heritage families") {
  SweepReport report = sweep_gf_quasiconcave(3);
  CHECK(report.ok());
  CHECK(report.families > 0);
}

TEST_CASE("duality report aggregation") {
  DualityReport report;
  report.checks.push_back({"a", Verdict::yes()});
  CHECK(report.all_hold());
  report.checks.push_back({"b", Verdict::no(Witness{}.add("set", S({1})))});
  CHECK(!report.all_hold());
}
