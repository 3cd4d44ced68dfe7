#include <doctest.h>

#include <functional>
#include <random>

#include "test_util.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/invariants.hpp"

using namespace turan2d;

namespace {
Graph cycle(int n) { return build({ConstructionSpec::Cycle{n}}); }
Graph clique(int k) { return build({ConstructionSpec::Clique{k}}); }
Graph forbidden7() { return build({ConstructionSpec::ForbiddenBlowup{4}}); }
}  // namespace

TEST_CASE("independence number on named graphs") {
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(Graph::empty(7)) == 7);
  CHECK(independence_number(clique(6)) == 1);
  CHECK(independence_number(Graph::empty(0)) == 0);

  Graph two_k5 = clique(5).disjoint_union(clique(5));
  CHECK(independence_number(two_k5) == 2);

  CHECK(independence_number(forbidden7()) == 2);
  CHECK(independence_number(oracle::petersen()) == 4);
}

TEST_CASE("solvers agree with brute force on every graph up to 5 vertices") {
  for (int n = 0; n <= 5; ++n) {
    for (uint32_t bits = 0; bits < (uint32_t{1} << oracle::edge_bits(n)); ++bits) {
      Graph g = oracle::graph_from_bits(n, bits);
      CHECK(independence_number(g) == oracle::alpha(g));
      CHECK(clique_number(g) == oracle::omega(g));
    }
  }
}

TEST_CASE("max independent set witness") {
  Graph p = oracle::petersen();
  auto witness = max_independent_set(p);
  CHECK(witness.size() == 4);
  for (size_t i = 0; i < witness.size(); ++i)
    for (size_t j = i + 1; j < witness.size(); ++j)
      CHECK(!p.adjacent(witness[i], witness[j]));
}

TEST_CASE("clique numbers on named graphs") {
  CHECK(clique_number(cycle(5)) == 2);
  CHECK(clique_number(clique(4)) == 4);
  CHECK(clique_number(forbidden7()) == 3);
  CHECK(clique_number_at_least(clique(8), 8));
  CHECK(!clique_number_at_least(clique(8), 9));
}

TEST_CASE("clique counts") {
  CHECK(clique_count(clique(4), 3) == 4);
  CHECK(clique_count(cycle(5), 2) == 5);
  CHECK(clique_count(clique(5), 4) == 5);
  CHECK(clique_count(clique(5), 1) == 5);
  CHECK(clique_count(cycle(5), 3) == 0);
  CHECK(clique_count(cycle(5), 7) == 0);
  CHECK_THROWS_AS(clique_count(cycle(5), 0), invalid_argument);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(cycle(5)) == 2);
  CHECK(degeneracy(clique(5)) == 4);
  CHECK(degeneracy(oracle::petersen()) == 3);
  CHECK(degeneracy(Graph::empty(4)) == 0);
}

TEST_CASE("local independence number") {
  CHECK(local_independence_number(forbidden7(), 7) == 2);
  CHECK(local_independence_number(cycle(7), 7) == 3);
  Graph two_k5 = clique(5).disjoint_union(clique(5));
  CHECK(local_independence_number(two_k5, 5) == 1);
  CHECK_THROWS_AS(local_independence_number(cycle(5), 6), invalid_argument);
  CHECK_THROWS_AS(local_independence_number(cycle(5), 0), invalid_argument);
}

TEST_CASE("local independence is monotone in m and matches alpha at m = n") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);  // 4..9
    uint32_t bits = static_cast<uint32_t>(rng() & ((1u << oracle::edge_bits(n)) - 1));
    Graph g = oracle::graph_from_bits(n, bits);
    int prev = local_independence_number(g, 1);
    for (int m = 2; m <= n; ++m) {
      int cur = local_independence_number(g, m);
      CHECK(prev <= cur);
      prev = cur;
    }
    CHECK(prev == independence_number(g));
  }
}

TEST_CASE("thresholded local independence agrees with the exact value") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 6 + static_cast<int>(rng() % 5);
    uint32_t bits = static_cast<uint32_t>(rng() & ((1u << oracle::edge_bits(n)) - 1));
    Graph g = oracle::graph_from_bits(n, bits);
    int m = 3 + static_cast<int>(rng() % (n - 2));
    int exact = local_independence_number(g, m);
    for (int r = 1; r <= m + 1; ++r) CHECK(local_independence_at_least(g, m, r) == (exact >= r));
  }
}

TEST_CASE("subgraph containment") {
  CHECK(!contains_subgraph(cycle(5), clique(3)));
  CHECK(contains_subgraph(clique(4), clique(3)));
  Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  CHECK(!contains_subgraph(bowtie, cycle(5)));
  CHECK(contains_subgraph(oracle::petersen(), cycle(5)));
  CHECK(contains_subgraph(cycle(5), Graph::empty(0)));

  auto emb = find_subgraph_embedding(oracle::petersen(), cycle(5));
  REQUIRE(emb.has_value());
  for (int i = 0; i < 5; ++i) CHECK(oracle::petersen().adjacent((*emb)[i], (*emb)[(i + 1) % 5]));
}

TEST_CASE("containment brute-force sweep on small hosts") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int hn = 4 + static_cast<int>(rng() % 3);
    int pn = 3 + static_cast<int>(rng() % 2);
    Graph host = oracle::graph_from_bits(hn, static_cast<uint32_t>(rng()) &
                                                 ((1u << oracle::edge_bits(hn)) - 1));
    Graph pat = oracle::graph_from_bits(pn, static_cast<uint32_t>(rng()) &
                                                ((1u << oracle::edge_bits(pn)) - 1));
    // oracle: try all injective maps
    std::vector<int> verts(hn);
    std::iota(verts.begin(), verts.end(), 0);
    bool found = false;
    std::vector<int> sel(pn);
    std::function<void(int, uint32_t)> rec = [&](int depth, uint32_t used) {
      if (found) return;
      if (depth == pn) {
        for (int i = 0; i < pn; ++i)
          for (int j = i + 1; j < pn; ++j)
            if (pat.adjacent(i, j) && !host.adjacent(sel[i], sel[j])) return;
        found = true;
        return;
      }
      for (int v = 0; v < hn; ++v) {
        if ((used >> v) & 1) continue;
        sel[depth] = v;
        rec(depth + 1, used | (1u << v));
      }
    };
    rec(0, 0);
    CHECK(contains_subgraph(host, pat) == found);
  }
}

TEST_CASE("budgeted independence number") {
  CHECK(independence_number_budgeted(oracle::petersen(), 1'000'000) == 4);
  CHECK(!independence_number_budgeted(oracle::petersen(), 1).has_value());
}
