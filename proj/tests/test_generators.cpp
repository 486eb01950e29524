#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "setlink/generators.hpp"
#include "setlink/properties.hpp"

using namespace setlink;
using setlink::test::S;
using setlink::test::make_family;

TEST_CASE("fixtures reproduce the worked examples exactly") {
  CHECK(fixture_family("acc_not_chain") ==
        make_family(3, {{}, {1}, {2}, {2, 3}, {1, 2, 3}}));
  CHECK(fixture_family("chain_not_acc") ==
        make_family(3, {{1}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}));
  CHECK(fixture_family("fig2a") ==
        make_family(4, {{}, {1}, {2}, {3}, {1, 2}, {2, 4}, {3, 4}, {1, 2, 3},
                        {1, 2, 3, 4}}));
  CHECK(fixture_family("fig2b") ==
        make_family(4, {{}, {1}, {4}, {1, 3}, {3, 4}, {1, 2, 3}, {2, 3, 4},
                        {1, 2, 3, 4}}));

  WeightedGraph diamond = fixture_graph("diamond_graph");
  CHECK(diamond.edges() == std::vector<std::pair<Element, Element>>{
                               {0, 1}, {0, 3}, {1, 2}, {2, 3}});

  SetFunction nonqc = fixture_set_function("bool2_nonqc");
  CHECK(nonqc(S({1})) == Rational(1));
  CHECK(nonqc(S({2})) == Rational(1));
  CHECK(nonqc(S({1, 2})) == Rational(0));

  LinkageFunction pi = fixture_linkage("pi_neq_piF");
  CHECK(pi(1, S({1, 2})) == Rational(2));
  CHECK(pi(0, S({1})) == Rational(1));

  CHECK_THROWS_AS(fixture("no_such_thing"), Error);
  try {
    fixture("no_such_thing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_fixture);
  }
  CHECK(fixture_names().size() == 8);
}

TEST_CASE("fixture verdict matrix") {
  SetFamily anc = fixture_family("acc_not_chain");
  CHECK(is_accessible(anc).holds);
  CHECK(!has_chain_property(anc).holds);

  SetFamily cna = fixture_family("chain_not_acc");
  CHECK(has_chain_property(cna).holds);
  CHECK(!is_accessible(cna).holds);

  SetFamily fig2a = fixture_family("fig2a");
  CHECK(has_heritage(fig2a).holds);
  CHECK(!is_closure_space(fig2a).holds);
  CHECK(!has_chain_property(fig2a).holds);

  SetFamily fig2b = fixture_family("fig2b");
  CHECK(has_chain_property(fig2b).holds);
  CHECK(!is_closure_space(fig2b).holds);
}

TEST_CASE("connected subgraph families") {
  SetFamily diamond = fixture_family("diamond_connected");
  CHECK(diamond ==
        connected_subgraph_family(fixture_graph("diamond_graph")));
  CHECK(diamond.size() == 14);
  CHECK(diamond == make_family(4, {{},
                                   {1}, {2}, {3}, {4},
                                   {1, 2}, {2, 3}, {3, 4}, {1, 4},
                                   {1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4},
                                   {1, 2, 3, 4}}));
  CHECK(has_chain_property(diamond).holds);

  WeightedGraph edgeless(GroundSet(2), {});
  CHECK(connected_subgraph_family(edgeless) == make_family(2, {{}, {1}, {2}}));

  WeightedGraph k3(GroundSet(3), {{0, 1}, {0, 2}, {1, 2}});
  CHECK(connected_subgraph_family(k3).size() == 8);
}

TEST_CASE("family enumeration") {
  FamilyEnumerator accessible1(1, {FamilyProperty::accessible});
  std::vector<SetFamily> found;
  while (auto f = accessible1.next()) found.push_back(*f);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == make_family(1, {{}}));
  CHECK(found[1] == make_family(1, {{}, {1}}));

  FamilyEnumerator all2(2);
  std::uint64_t count = 0;
  bool saw_empty = false;
  while (auto f = all2.next()) {
    ++count;
    if (f->empty()) saw_empty = true;
  }
  CHECK(count == 16);
  CHECK(saw_empty);

  FamilyEnumerator filtered(3, {FamilyProperty::accessible,
                                FamilyProperty::chain});
  while (auto f = filtered.next()) {
    CHECK(is_accessible(*f).holds);
    CHECK(has_chain_property(*f).holds);
  }

  CHECK_THROWS_AS(FamilyEnumerator(5), Error);
  try {
    FamilyEnumerator(5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity_exceeded);
  }
  CHECK_NOTHROW(FamilyEnumerator(5, {}, 0, 1, /*max_n=*/5));
  CHECK_THROWS_AS(FamilyEnumerator(6, {}, 0, 1, /*max_n=*/6), Error);
}

TEST_CASE("family enumeration counts at n=3") {
  auto count_with = [](std::vector<FamilyProperty> filters) {
    FamilyEnumerator families(3, std::move(filters));
    std::uint64_t count = 0;
    while (families.next()) ++count;
    return count;
  };
  CHECK(count_with({}) == 256);
  CHECK(count_with({FamilyProperty::accessible}) == 82);
  CHECK(count_with({FamilyProperty::accessible, FamilyProperty::chain}) == 73);
  CHECK(count_with({FamilyProperty::accessible, FamilyProperty::heritage}) ==
        76);
}

TEST_CASE("sharded enumeration covers everything once") {
  std::vector<SetFamily> whole;
  FamilyEnumerator all(2);
  while (auto f = all.next()) whole.push_back(*f);

  std::vector<SetFamily> merged;
  for (std::uint64_t shard = 0; shard < 3; ++shard) {
    FamilyEnumerator part(2, {}, shard, 3);
    while (auto f = part.next()) merged.push_back(*f);
  }
  CHECK(merged.size() == whole.size());
  for (const SetFamily& f : whole)
    CHECK(std::count(merged.begin(), merged.end(), f) == 1);
}

TEST_CASE("set-function enumeration") {
  SetFamily anc = fixture_family("acc_not_chain");  // four non-empty members
  SetFunctionEnumerator all(anc, {Rational(0), Rational(1)});
  std::uint64_t count = 0;
  while (all.next()) ++count;
  CHECK(count == 16);

  SetFunctionEnumerator quasi(anc, {Rational(0), Rational(1)},
                              /*quasiconcave_only=*/true);
  bool saw_indicator = false;
  std::uint64_t quasi_count = 0;
  while (auto f = quasi.next()) {
    ++quasi_count;
    CHECK(is_quasiconcave(*f, anc).holds);
    bool indicator = (*f)(S({1})) == Rational(1) &&
                     (*f)(S({2})) == Rational(0) &&
                     (*f)(S({2, 3})) == Rational(0) &&
                     (*f)(S({1, 2, 3})) == Rational(0);
    saw_indicator |= indicator;
  }
  CHECK(saw_indicator);
  CHECK(quasi_count >= 2);  // at least the constants

  SetFamily big = powerset_family(GroundSet(4));
  CHECK_THROWS_AS(SetFunctionEnumerator(
                      big, {Rational(0), Rational(1), Rational(2)}),
                  Error);  // 3^15 candidates exceed the budget
}

TEST_CASE("monotone linkage enumeration") {
  MonotoneLinkageEnumerator one(GroundSet(1), {Rational(1), Rational(2)});
  std::uint64_t count1 = 0;
  while (one.next()) ++count1;
  CHECK(count1 == 2);

  // 4 pairs (x, X) at n=2, so 16 candidate tables; 9 are monotone
  MonotoneLinkageEnumerator two(GroundSet(2), {Rational(1), Rational(2)});
  CHECK(two.total_candidates() == 16);
  std::uint64_t count2 = 0;
  while (auto pi = two.next()) {
    ++count2;
    CHECK(is_monotone_linkage(*pi).holds);
  }
  CHECK(count2 == 9);

  MonotoneLinkageEnumerator three(GroundSet(3), {Rational(1), Rational(2)});
  CHECK(three.total_candidates() == 4096);
  std::uint64_t count3 = 0;
  while (three.next()) ++count3;
  CHECK(count3 == 216);

  CHECK_THROWS_AS(
      MonotoneLinkageEnumerator(GroundSet(4), {Rational(1), Rational(2)}),
      Error);  // 2^32 candidates
}

TEST_CASE("random monotone linkages are monotone and draw from the values") {
  std::mt19937_64 rng(23);
  std::vector<Rational> values{Rational(1), Rational(3, 2), Rational(4)};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 5;
    LinkageFunction pi = random_monotone_linkage(GroundSet(n), values, rng);
    CHECK(is_monotone_linkage(pi).holds);
    for (const auto& entry : pi.table_entries())
      CHECK(std::find(values.begin(), values.end(), entry.value) !=
            values.end());
  }
}
