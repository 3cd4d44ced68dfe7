#include <doctest.h>

#include "test_util.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/invariants.hpp"

using namespace turan2d;

TEST_CASE("forbidden blowup at k = 4 is the 7-vertex, 11-edge graph") {
  Graph g = build({ConstructionSpec::ForbiddenBlowup{4}});
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 11);
  CHECK(independence_number(g) == 2);
  CHECK(clique_number(g) == 3);
  // same parts as odd-optimal at k = 4 (a = 1)
  CHECK(oracle::isomorphic(g, build({ConstructionSpec::OddOptimal{4}})));
  // at k = 3 the blowup degenerates to the pentagon
  CHECK(oracle::isomorphic(build({ConstructionSpec::ForbiddenBlowup{3}}),
                           build({ConstructionSpec::Cycle{5}})));
}

TEST_CASE("odd-optimal tuned parameter") {
  CHECK(odd_optimal_parameter(4) == 1);
  CHECK(odd_optimal_parameter(5) == 1);
  CHECK(odd_optimal_parameter(10) == 2);
  CHECK_THROWS_AS(odd_optimal_parameter(3), invalid_argument);
}

TEST_CASE("odd-optimal expected statistics") {
  ExpectedStats st = expected_stats({ConstructionSpec::OddOptimal{5}});
  CHECK(st.vertices == 9);
  CHECK(st.edges == 19);
  CHECK(*st.alpha_upper == 2);
  CHECK(*st.two_density == Rational(8, 3));
}

TEST_CASE("every construction matches its expected statistics") {
  std::vector<ConstructionSpec> specs = {
      {ConstructionSpec::Cycle{9}},
      {ConstructionSpec::Clique{5}},
      {ConstructionSpec::DisjointCliques{{5, 5, 5, 5}}},
      {ConstructionSpec::CyclePower{8, 2}},
      {ConstructionSpec::C5CliqueBlowup{{1, 2, 1, 1, 2}}},
      {ConstructionSpec::ForbiddenBlowup{5}},
      {ConstructionSpec::OddOptimal{6}},
      {ConstructionSpec::TuranComplement{20, 4}},
      {ConstructionSpec::GeneralExample{17, 5}},
  };
  for (const auto& spec : specs) {
    CAPTURE(spec.str());
    Graph g = build(spec);
    ExpectedStats st = expected_stats(spec);
    CHECK(g.order() == st.vertices);
    CHECK(g.edge_count() == st.edges);
    if (st.alpha_upper) CHECK(independence_number(g) <= *st.alpha_upper);
    if (st.two_density) CHECK(m2(g).value == *st.two_density);
  }
}

TEST_CASE("blowup complements are triangle-free") {
  for (int k = 3; k <= 8; ++k) {
    Graph g = build({ConstructionSpec::ForbiddenBlowup{k}});
    CHECK(!clique_number_at_least(g.complement(), 3));
    CHECK(independence_number(g) <= 2);
  }
  for (int k = 4; k <= 8; ++k) {
    Graph g = build({ConstructionSpec::OddOptimal{k}});
    CHECK(!clique_number_at_least(g.complement(), 3));
  }
}

TEST_CASE("general example has m vertices and alpha exactly r-1") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{17, 5}, {22, 6}, {31, 7}, {40, 10}}) {
    CAPTURE(m);
    CAPTURE(r);
    Graph g = build({ConstructionSpec::GeneralExample{m, r}});
    CHECK(g.order() == m);
    CHECK(independence_number(g) == r - 1);
  }
  // the divisible case falls outside this family
  CHECK_THROWS_AS(build({ConstructionSpec::GeneralExample{20, 5}}), invalid_argument);
}

TEST_CASE("cycle power of the 8-cycle") {
  Graph g = build({ConstructionSpec::CyclePower{8, 2}});
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 16);
  CHECK(clique_number(g) == 3);
  CHECK(independence_number(g) == 2);
}

TEST_CASE("build rejects bad parameters") {
  CHECK_THROWS_AS(build({ConstructionSpec::Cycle{2}}), invalid_argument);
  CHECK_THROWS_AS(build({ConstructionSpec::CyclePower{8, 4}}), invalid_argument);
  CHECK_THROWS_AS(build({ConstructionSpec::C5CliqueBlowup{{1, 2, 3}}}), invalid_argument);
  CHECK_THROWS_AS(build({ConstructionSpec::C5CliqueBlowup{{0, 1, 1, 1, 1}}}), invalid_argument);
  CHECK_THROWS_AS(build({ConstructionSpec::OddOptimal{3}}), invalid_argument);
  CHECK_THROWS_AS(build({ConstructionSpec::DisjointCliques{{}}}), invalid_argument);
}

TEST_CASE("textual forms round-trip") {
  for (const char* text : {"cycle:n=9", "clique:k=5", "disjoint-cliques:5,5,5,5",
                           "cycle-power:n=8,d=2", "c5-blowup:1,2,1,1,2", "forbidden-blowup:k=4",
                           "odd-optimal:k=5", "turan-complement:m=20,parts=4",
                           "general-example:m=17,r=5"}) {
    ConstructionSpec spec = ConstructionSpec::parse(text);
    CHECK(spec.str() == text);
    CHECK(build(spec).order() > 0);
  }
  // positional shorthand
  CHECK(ConstructionSpec::parse("cycle:9").str() == "cycle:n=9");
  CHECK_THROWS_AS(ConstructionSpec::parse("mystery:1"), invalid_argument);
  CHECK_THROWS_AS(ConstructionSpec::parse("cycle"), invalid_argument);
  CHECK_THROWS_AS(ConstructionSpec::parse("cycle:n=x"), invalid_argument);
}
