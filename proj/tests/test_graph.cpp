#include <doctest.h>

#include "test_util.hpp"
#include "turan2d/graph.hpp"
#include "turan2d/invariants.hpp"

using namespace turan2d;

TEST_CASE("from_edges basics") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(1, 0));

  Graph empty5 = Graph::from_edges(5, {});
  CHECK(empty5.edge_count() == 0);

  // duplicates collapse
  Graph k2 = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(k2.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(600, {}), invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), invalid_argument);
}

TEST_CASE("adjacency is symmetric and diagonal-free across random graphs") {
  for (uint32_t bits = 0; bits < 1024; bits += 7) {
    Graph g = oracle::graph_from_bits(5, bits);
    int total = 0;
    for (int v = 0; v < 5; ++v) {
      CHECK(!g.adjacent(v, v));
      total += g.degree(v);
      for (int u = 0; u < 5; ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("complement") {
  Graph k5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                   {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(k5.complement().edge_count() == 0);

  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(oracle::isomorphic(c5.complement(), c5));  // pentagon is self-complementary

  for (uint32_t bits = 0; bits < 1024; bits += 3) {
    Graph g = oracle::graph_from_bits(5, bits);
    CHECK(g.complement().complement() == g);
  }
}

TEST_CASE("alpha equals omega of the complement, exhaustive to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    uint32_t limit = uint32_t{1} << oracle::edge_bits(n);
    uint32_t step = n < 6 ? 1 : 127;  // sampled at n = 6
    for (uint32_t bits = 0; bits < limit; bits += step) {
      Graph g = oracle::graph_from_bits(n, bits);
      CHECK(independence_number(g) == clique_number(g.complement()));
    }
  }
}

TEST_CASE("induced and permuted") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph path = c5.induced({0, 1, 2});
  CHECK(path.order() == 3);
  CHECK(path.edge_count() == 2);

  Graph relabeled = c5.permuted({2, 3, 4, 0, 1});
  CHECK(relabeled.edge_count() == 5);
  CHECK(oracle::isomorphic(relabeled, c5));

  CHECK_THROWS_AS(c5.induced({0, 0}), invalid_argument);
}

TEST_CASE("disjoint union") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph u = k3.disjoint_union(k3);
  CHECK(u.order() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(!u.adjacent(0, 3));
}

TEST_CASE("graphs above 64 vertices use multiple words per row") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 100; ++i) edges.emplace_back(i, (i + 1) % 100);
  Graph c100 = Graph::from_edges(100, edges);
  CHECK(c100.edge_count() == 100);
  CHECK(c100.adjacent(99, 0));
  CHECK(c100.degree(50) == 2);
  CHECK(independence_number(c100) == 50);
}
