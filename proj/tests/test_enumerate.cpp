#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "test_util.hpp"
#include "turan2d/canonical.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/enumerate.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"

using namespace turan2d;

TEST_CASE("class counts of all graphs") {
  CHECK(count_classes(1) == 1);
  CHECK(count_classes(4) == 11);
  CHECK(count_classes(5) == 34);
  CHECK(count_classes(6) == 156);
  CHECK(count_classes(7) == 1044);
  CHECK_THROWS_AS(count_classes(9), invalid_argument);
}

TEST_CASE("alpha-bounded enumeration against labeled brute force") {
  CHECK(enumerate_alpha_bounded(3, 1).size() == 1);  // only the triangle
  CHECK(enumerate_alpha_bounded(5, 2).size() == 14);

  for (int m = 2; m <= 6; ++m) {
    for (int amax = 1; amax <= m; ++amax) {
      uint64_t expect = oracle::count_classes_brute(
          m, [&](const Graph& g) { return oracle::alpha(g) <= amax; });
      CHECK(enumerate_alpha_bounded(m, amax).size() == expect);
    }
  }
}

TEST_CASE("generator stream is deduplicated, sorted, and correct") {
  auto keys = enumerate_alpha_bounded(6, 2);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  std::set<std::string> uniq(keys.begin(), keys.end());
  CHECK(uniq.size() == keys.size());
  for (const auto& key : keys) {
    Graph g = parse_graph6(key);
    CHECK(g.order() == 6);
    CHECK(independence_number(g) <= 2);
    CHECK(canonical_key(g) == key);  // stream keys are canonical forms
  }
}

TEST_CASE("unconstrained enumeration is guarded") {
  CHECK_THROWS_AS(enumerate_alpha_bounded(12, 12), invalid_argument);
}

TEST_CASE("generator honors the cache and ignores stale versions") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "turan2d_cache_test";
  fs::remove_all(dir);
  auto fresh = enumerate_alpha_bounded(6, 2, PruneProfile::none(), nullptr, dir.string());
  REQUIRE(fs::exists(dir / "alpha2_n6.g6"));
  auto cached = enumerate_alpha_bounded(6, 2, PruneProfile::none(), nullptr, dir.string());
  CHECK(fresh == cached);
  // corrupt the version sidecar: the cache must be ignored, not trusted
  {
    std::ofstream meta(dir / "alpha2_n6.g6.meta");
    meta << "generator_version=0\n";
  }
  auto regenerated = enumerate_alpha_bounded(6, 2, PruneProfile::none(), nullptr, dir.string());
  CHECK(fresh == regenerated);
  fs::remove_all(dir);
}

TEST_CASE("minimum 2-density at the known points") {
  SearchOutcome o53 = min_m2(5, 3);
  CHECK(o53.value == Rational(4, 3));
  REQUIRE(!o53.witnesses.empty());
  CHECK(oracle::isomorphic(parse_graph6(o53.witnesses[0]),
                           build({ConstructionSpec::Cycle{5}})));

  CHECK(min_m2(6, 3).value == Rational(2));
  CHECK(min_m2(7, 3).value == Rational(2));

  SearchOutcome o73 = min_m2(7, 3);
  for (const auto& w : o73.witnesses) {
    Graph g = parse_graph6(w);
    CHECK(g.order() == 7);
    CHECK(independence_number(g) <= 2);
    CHECK(m2(g).value == o73.value);
  }
}

TEST_CASE("minimum 2-density profiles do not change the value") {
  SearchOutcome plain = min_m2(6, 3, PruneProfile::none());
  SearchOutcome capped = min_m2(6, 3);  // default incumbent clique cap
  CHECK(plain.value == capped.value);
  CHECK(capped.pruned > 0);
  REQUIRE(capped.excluded_density_floor.has_value());
  CHECK(capped.value < *capped.excluded_density_floor);
  CHECK(!capped.profile_citations.empty());
}

TEST_CASE("minimum 2-density under the triangle-free profile reports its floor") {
  SearchOutcome o = min_m2(8, 4, PruneProfile::host_triangle_free());
  REQUIRE(o.excluded_density_floor.has_value());
  CHECK(*o.excluded_density_floor == Rational(2));
  // the unconstrained minimum is min(value, floor); the bound from the
  // 3r-4 analysis is 5/3 - 1/(r-2) = 7/6 at r = 4
  Rational effective = std::min(o.empty_outcome ? Rational(2) : o.value, Rational(2));
  CHECK(effective >= Rational(7, 6));
}

TEST_CASE("edge minimum under a 2-density cap") {
  SearchOutcome o = min_edges_under_m2_cap(5, 3, Rational(2));
  CHECK(o.value_is_integer);
  CHECK(o.value == Rational(5));
  REQUIRE(!o.witnesses.empty());
  CHECK(oracle::isomorphic(parse_graph6(o.witnesses[0]), build({ConstructionSpec::Cycle{5}})));

  SearchOutcome tiny = min_edges_under_m2_cap(3, 2, Rational(100));
  CHECK(tiny.value == Rational(3));
  CHECK(tiny.witness_total == 1);

  // impossible cap: every 3-vertex graph with alpha <= 1 is K_3 with m2 = 2
  SearchOutcome none = min_edges_under_m2_cap(3, 2, Rational(1, 2));
  CHECK(none.empty_outcome);
}

TEST_CASE("monotonicity of the minimum 2-density in m") {
  Rational prev = min_m2(5, 3).value;
  for (int m = 6; m <= 8; ++m) {
    Rational cur = min_m2(m, 3).value;
    CHECK(prev <= cur);
    prev = cur;
  }
}

TEST_CASE("search outcomes re-verify from scratch") {
  SearchOutcome o = min_m2(8, 3);
  CHECK(o.value == Rational(5, 2));
  CHECK(o.enumerated > 0);
  for (const auto& w : o.witnesses) {
    Graph g = parse_graph6(w);
    CHECK(g.order() == 8);
    CHECK(!independence_number_at_least(g, 3));
    CHECK(m2(g).value == Rational(5, 2));
  }
}

TEST_CASE("searches reject bad parameters") {
  CHECK_THROWS_AS(min_m2(4, 3), invalid_argument);
  CHECK_THROWS_AS(min_edges_under_m2_cap(5, 3, Rational(-1)), invalid_argument);
}
