#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan2d/graph.hpp"
#include "turan2d/rational.hpp"

namespace turan2d {

/// Edge density ratio (e(g) - 1) / (|g| - 2); requires at least 3 vertices.
Rational d2(const Graph& g);

struct DensityResult {
  Rational value;
  std::vector<int> witness;  // vertex subset attaining the value
};

/// Max of d2 over induced subgraphs on >= 3 vertices, with a witness subset.
/// Adding edges to a fixed vertex set only raises d2, so the maximum over all
/// subgraphs is attained by an induced one; that reduction is verified by an
/// exhaustive all-subgraph oracle in the test suite.
DensityResult m2(const Graph& g);

/// Maximum edge count over induced s-vertex subgraphs, plus one maximizing
/// subset.  Requires 3 <= s <= |g|.
std::pair<int, std::vector<int>> max_edges_at_size(const Graph& g, int s);

/// True iff every proper subgraph on >= 3 vertices has strictly smaller m2.
bool is_strictly_2_balanced(const Graph& g);

/// A strictly-2-balanced subgraph of h with the same m2.  Deterministic
/// choice: among d2-attaining induced subsets that are strictly 2-balanced,
/// largest vertex count first, then smallest canonical key (edge count is
/// forced by the shared d2 value).  Returns the canonical representative.
Graph reduce_to_strictly_2_balanced(const Graph& h);

/// Minimal family of strictly 2-balanced graphs whose absence from a host
/// certifies that every m of its vertices contain an independent r-set.
struct ForbiddenFamily {
  int m = 0;
  int r = 0;
  std::vector<Graph> members;              // canonical, sorted by graph6 key
  std::vector<std::string> member_keys;
  Rational min_density;                    // min d2 over members

  size_t size() const { return members.size(); }
};

/// Builds the family by reducing every m-vertex graph without an independent
/// r-set to its strictly 2-balanced core, deduplicating by canonical key and
/// dropping any member that contains another member as a subgraph.
/// Guarded to m <= 10.
ForbiddenFamily forbidden_family(int m, int r);

}  // namespace turan2d
