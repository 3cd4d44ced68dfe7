#include <doctest.h>

#include "test_util.hpp"
#include "turan2d/graph6.hpp"

using namespace turan2d;

TEST_CASE("graph6 fixed encodings") {
  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);

  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(to_graph6(k2) == "A_");

  CHECK(to_graph6(Graph::empty(0)) == "?");
}

TEST_CASE("graph6 round trip over every graph on up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    for (uint32_t bits = 0; bits < (uint32_t{1} << oracle::edge_bits(n)); ++bits) {
      Graph g = oracle::graph_from_bits(n, bits);
      std::string enc = to_graph6(g);
      Graph back = parse_graph6(enc);
      CHECK(back == g);
      CHECK(to_graph6(back) == enc);
    }
  }
}

TEST_CASE("graph6 long form above 62 vertices") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < 100; ++i) edges.emplace_back(i, i + 1);
  Graph p100 = Graph::from_edges(100, edges);
  std::string enc = to_graph6(p100);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc) == p100);
}

TEST_CASE("graph6 tolerates header and newline on input only") {
  Graph k2 = parse_graph6(">>graph6<<A_\n");
  CHECK(k2.edge_count() == 1);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), invalid_argument);
  CHECK_THROWS_AS(parse_graph6("A"), invalid_argument);      // missing body
  CHECK_THROWS_AS(parse_graph6("A_~"), invalid_argument);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("B\x1f"), invalid_argument);  // byte below 63
  // nonzero padding: K_2 body with a stray low bit set
  CHECK_THROWS_AS(parse_graph6("A`"), invalid_argument);
}
