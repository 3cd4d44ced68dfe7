#pragma once

#include <string>
#include <vector>

#include "turan2d/graph.hpp"

namespace turan2d {

/// Canonical relabeling of a graph: `labeling[i]` is the original vertex
/// sitting at position i of the canonical representative.
struct CanonicalResult {
  Graph canonical;
  std::vector<int> labeling;
};

/// Computes an isomorphism-class representative by equitable degree
/// refinement plus backtracking over individualized vertices, pruned with
/// automorphisms discovered along the way.  Two graphs get equal
/// representatives iff they are isomorphic.
CanonicalResult canonical_form(const Graph& g);

/// graph6 string of the canonical representative; the usual dedup key.
std::string canonical_key(const Graph& g);

/// Classes of vertices swappable by an automorphism transposition
/// (u and w are equivalent iff their neighborhoods agree outside {u, w}).
/// Returns the class index per vertex, classes numbered by smallest member.
std::vector<int> transposition_equivalence_classes(const Graph& g);

}  // namespace turan2d
