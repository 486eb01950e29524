// Acceptance suite: every release-gating property, each printed as one
// pass/fail line with its runtime. Run directly or through ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "helpers.hpp"
#include "setlink/duality.hpp"
#include "setlink/generators.hpp"
#include "setlink/optimize.hpp"
#include "setlink/sweeps.hpp"

using namespace setlink;
using setlink::test::S;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title, double budget_seconds)
      : number_(number),
        title_(std::move(title)),
        budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool condition, const std::string& what) {
    CHECK_MESSAGE(condition, "criterion ", number_, ": ", what);
    ok_ &= condition;
  }

  void expect_clean(const SweepReport& report) {
    expect(report.ok(), report.claim + " sweep: " + report.first_violation);
    expect(report.families > 0, report.claim + " sweep saw no families");
  }

  ~Criterion() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    CHECK_MESSAGE(elapsed <= budget_, "criterion ", number_,
                  " exceeded its time budget of ", budget_, "s");
    ok_ &= elapsed <= budget_;
    std::printf("[acceptance] criterion %d (%s): %s (%.2f s)\n", number_,
                title_.c_str(), ok_ ? "PASS" : "FAIL", elapsed);
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  double budget_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

TEST_CASE("criterion 1: fixture verdict matrix") {
  Criterion c(1, "fixture verdict matrix", 1.0);

  SetFamily anc = fixture_family("acc_not_chain");
  c.expect(is_accessible(anc).holds, "acc_not_chain accessible");
  c.expect(!has_chain_property(anc).holds, "acc_not_chain not chain");

  SetFamily cna = fixture_family("chain_not_acc");
  c.expect(has_chain_property(cna).holds, "chain_not_acc chain");
  c.expect(!is_accessible(cna).holds, "chain_not_acc not accessible");

  SetFamily fig2a = fixture_family("fig2a");
  c.expect(has_heritage(fig2a).holds, "fig2a heritage");
  c.expect(!has_chain_property(fig2a).holds, "fig2a not chain");
  Verdict a = is_closure_space(fig2a);
  c.expect(!a.holds, "fig2a not a closure space");
  c.expect(a.witness && *a.witness->set("X") == S({2, 4}) &&
               *a.witness->set("Y") == S({3, 4}),
           "fig2a witness pair {2,4},{3,4}");

  SetFamily fig2b = fixture_family("fig2b");
  c.expect(has_chain_property(fig2b).holds, "fig2b chain");
  Verdict b = is_closure_space(fig2b);
  c.expect(!b.holds, "fig2b not a closure space");
  c.expect(b.witness && *b.witness->set("X") == S({1, 3}) &&
               *b.witness->set("Y") == S({3, 4}),
           "fig2b witness pair {1,3},{3,4}");
}

TEST_CASE("criterion 2: connected-subgraph system of the 4-cycle") {
  Criterion c(2, "connected-subgraph family", 1.0);

  SetFamily family = connected_subgraph_family(fixture_graph("diamond_graph"));
  c.expect(family.size() == 14, "exactly 14 member sets");
  std::vector<ElementSet> expected = {
      S({}),     S({1}),       S({2}),       S({3}),       S({4}),
      S({1, 2}), S({2, 3}),    S({3, 4}),    S({1, 4}),    S({1, 2, 3}),
      S({2, 3, 4}), S({1, 3, 4}), S({1, 2, 4}), S({1, 2, 3, 4})};
  std::sort(expected.begin(), expected.end());
  c.expect(family.members() == expected, "the member list matches");
  c.expect(has_chain_property(family).holds, "the system is a chain system");
}

TEST_CASE("criterion 3: round-trip equality characterizes chain systems") {
  Criterion c(3, "G_F = F biconditional at n=3", 300.0);
  c.expect_clean(sweep_thm1(3, {Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("criterion 4: constructive counterexamples for non-chain systems") {
  Criterion c(4, "indicator counterexamples to n=4", 300.0);
  SweepReport report = sweep_thm1_converse(4);
  c.expect_clean(report);
  c.expect(report.families > 6000, "covers the non-chain accessible families");
}

TEST_CASE("criterion 5: quasi-concavity of F_pi characterizes heritage") {
  Criterion c(5, "F_pi biconditional and converse", 600.0);
  c.expect_clean(sweep_thm2(3));
  SweepReport converse = sweep_thm2_converse(4);
  c.expect_clean(converse);
  c.expect(converse.families > 5000,
           "covers the heritage-violating accessible families");
}

TEST_CASE("criterion 6: complement invariance, monotonicity, bound, covers") {
  Criterion c(6, "prop1, prop3, prop4 and the cover identity", 300.0);
  c.expect_clean(sweep_prop1(4));
  c.expect_clean(sweep_prop3(3, {Rational(0), Rational(1)}));
  c.expect_clean(sweep_prop4(3, {Rational(0), Rational(1)}));
  c.expect_clean(sweep_eq9(4, 100, 20260810));
}

TEST_CASE("criterion 7: the induced linkage is the least one") {
  Criterion c(7, "pi_F below pi and meet stability", 300.0);
  c.expect_clean(
      sweep_thm3(3, {Rational(1), Rational(2), Rational(3)}, 500, 7));
  c.expect_clean(
      sweep_thm4(3, {Rational(1), Rational(2), Rational(3)}, 500, 7));
}

TEST_CASE("criterion 8: peeling matches brute force") {
  Criterion c(8, "greedy peeling oracle equivalence", 120.0);

  std::mt19937_64 rng(42);
  std::vector<Rational> values{Rational(0), Rational(1), Rational(2),
                               Rational(3), Rational(4)};
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + trial % 5;  // ground sets of size 4 through 8
    GroundSet ground(n);
    LinkageFunction pi = random_monotone_linkage(ground, values, rng);
    auto greedy = maximize_boolean(pi);
    auto oracle =
        brute_force_max(boolean_min_function(pi), powerset_family(ground));
    if (greedy.second != oracle.second) ++failures;
  }
  c.expect(failures == 0, "every greedy value equals the brute-force value");

  auto [best, value] =
      maximize_boolean(LinkageFunction::degree(fixture_graph("diamond_graph")));
  c.expect(best == S({1, 2, 3, 4}) && value == Rational(2),
           "diamond degree instance returns (V, 2)");
}

TEST_CASE("criterion 9: the Boolean micro-fixtures") {
  Criterion c(9, "bool2_nonqc and pi_neq_piF", 1.0);

  SetFunction nonqc = fixture_set_function("bool2_nonqc");
  c.expect(derive_G_F(nonqc, nonqc.family())(S({1, 2})) == Rational(1),
           "G_F({1,2}) = 1");
  c.expect(!is_quasiconcave(nonqc, nonqc.family()).holds,
           "the fixture is not quasi-concave");

  SetFamily booleans = powerset_family(GroundSet(2));
  LinkageFunction pi = fixture_linkage("pi_neq_piF");
  SetFunction f = derive_F_pi(pi, booleans);
  LinkageFunction pi_f = derive_pi_F(f, booleans);
  bool constant_one = true;
  bool differs_from_pi = false;
  for (Element x = 0; x < 2; ++x)
    for (std::uint32_t m = 1; m < 4; ++m) {
      ElementSet set = ElementSet::from_bits(m);
      if (!set.contains(x)) continue;
      constant_one &= pi_f(x, set) == Rational(1);
      differs_from_pi |= pi_f(x, set) != pi(x, set);
    }
  c.expect(constant_one, "pi_F is constantly 1");
  c.expect(differs_from_pi, "pi_F differs from pi");
}
