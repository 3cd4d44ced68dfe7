#include <doctest.h>

#include "test_util.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"
#include "turan2d/verify.hpp"

using namespace turan2d;

TEST_CASE("equivalence check passes and its mutation fails with a witness") {
  CheckReport ok = check_equivalence_7_3();
  CHECK(ok.passed);
  CHECK(ok.instances_checked == 1044);

  CheckReport bad = check_equivalence_7_3(/*mutated=*/true);
  CHECK(!bad.passed);
  REQUIRE(!bad.counterexamples.empty());
  // every reported witness re-triggers the violated claim standalone
  for (const auto& [g6, context] : bad.counterexamples) {
    Graph g = parse_graph6(g6);
    CHECK(!clique_number_at_least(g, 4));
    CHECK(!independence_number_at_least(g, 3));
  }
  // the complement of the 7-cycle is such a witness; confirm it is caught
  Graph c7c = build({ConstructionSpec::Cycle{7}}).complement();
  CHECK(!clique_number_at_least(c7c, 4));
  CHECK(independence_number(c7c) == 2);
}

TEST_CASE("clique count lower bound, exhaustive to 6 in-test") {
  CheckReport r = check_clique_count_lower(6);
  CHECK(r.passed);
  CHECK(r.instances_checked > 200);
  CHECK(!check_clique_count_lower(4, /*mutated=*/true).passed);
}

TEST_CASE("clique count upper bound, exhaustive to 6 in-test") {
  CheckReport r = check_clique_count_upper(6);
  CHECK(r.passed);
  CHECK(!check_clique_count_upper(6, 6, {3, 4, 5, 6}, /*mutated=*/true).passed);
}

TEST_CASE("triangle apex structure, exhaustive to 7 plus a few samples") {
  CheckReport r = check_triangle_nbhd(7, 25, 42);
  CHECK(r.passed);
  CHECK(r.instances_checked > 0);

  // dropping the blowup-freeness filter breaks part b exactly on hosts that
  // contain the blowup; the blowup itself is the minimal violating pattern
  CheckReport bad = check_triangle_nbhd(7, 0, 42, /*mutated=*/true);
  CHECK(!bad.passed);
  REQUIRE(!bad.counterexamples.empty());
  Graph h7 = build({ConstructionSpec::ForbiddenBlowup{4}});
  for (const auto& [g6, context] : bad.counterexamples)
    CHECK(contains_subgraph(parse_graph6(g6), h7));
}

TEST_CASE("switching check and its mutation") {
  CheckReport r = check_switching(7);
  CHECK(r.passed);
  // demanding pair-closure of every maximizer (not only vertex-maximal ones)
  // fails, e.g. on the 3-leaf star
  CheckReport bad = check_switching(5, /*mutated=*/true);
  CHECK(!bad.passed);
}

TEST_CASE("disjoint union check collects necessity notes") {
  CheckReport r = check_disjoint_union(5);
  CHECK(r.passed);
  CHECK(!r.notes.empty());  // dropping 2e > |V| genuinely breaks the claim
  CHECK(!check_disjoint_union(4, /*mutated=*/true).passed);
}

TEST_CASE("sparse triangle-free bound and its mutation") {
  CheckReport r = check_sparse_tf_bound(8);
  CHECK(r.passed);
  CHECK(r.instances_checked > 50);
  CheckReport bad = check_sparse_tf_bound(6, /*mutated=*/true);
  CHECK(!bad.passed);  // r below the legal range already fails on the pentagon
}

TEST_CASE("k-subset edge bound and its mutation") {
  CheckReport r = check_up_bip({5});
  CHECK(r.passed);
  CHECK(r.instances_checked == 1897);  // triangle-free classes on 9 vertices
  CheckReport bad = check_up_bip({5}, /*mutated=*/true);
  CHECK(!bad.passed);  // K_{4,5} has 20 > 16 edges once the hypothesis is dropped
}

TEST_CASE("check registry") {
  auto ids = check_ids();
  CHECK(ids.size() == 8);
  for (const auto& id : ids) CHECK(!check_citation(id).empty());
  CHECK_THROWS_AS(run_check("no-such-check"), invalid_argument);
  CHECK_THROWS_AS(check_citation("no-such-check"), invalid_argument);
}

TEST_CASE("counterexamples are capped at 20") {
  CheckReport bad = check_clique_count_lower(6, /*mutated=*/true);
  CHECK(!bad.passed);
  CHECK(bad.counterexamples.size() <= 20);
}
