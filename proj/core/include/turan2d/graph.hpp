#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan2d {

/// Thrown on violated preconditions of graph operations (bad vertex index,
/// self-loop, size out of range, malformed input, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph with one bit row per vertex.
///
/// The adjacency matrix is stored as n rows of ceil(n/64) words.  Rows are
/// kept symmetric and diagonal-free by construction; all mutation happens
/// through factory functions, so instances are safe to share across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() = default;

  /// Builds a graph from an explicit edge list; duplicate edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Empty graph on n vertices.
  static Graph empty(int n);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  int row_words() const { return words_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_,
            static_cast<size_t>(words_)};
  }

  int degree(int v) const;

  /// Vertices adjacent to v, ascending.
  std::vector<int> neighbors(int v) const;

  Graph complement() const;

  /// Induced subgraph on the given vertices; vertex i of the result is
  /// verts[i].  Duplicates are rejected.
  Graph induced(const std::vector<int>& verts) const;

  /// Induced subgraph on the vertices whose bits are set in mask (one word
  /// per 64 vertices, same layout as rows).
  Graph induced_mask(std::span<const uint64_t> mask) const;

  /// Relabels: vertex perm[i] of this graph becomes vertex i of the result.
  Graph permuted(const std::vector<int>& perm) const;

  /// Copy with one extra vertex adjacent exactly to the vertices in neigh.
  Graph with_appended_vertex(const std::vector<int>& neigh) const;

  /// Disjoint union.
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  Graph(int n, int words) : n_(n), words_(words), bits_(static_cast<size_t>(n) * words, 0) {}

  void set_edge(int u, int v) {
    uint64_t& a = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
    uint64_t& b = bits_[static_cast<size_t>(v) * words_ + (u >> 6)];
    a |= uint64_t{1} << (v & 63);
    b |= uint64_t{1} << (u & 63);
  }

  void recount_edges();

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<uint64_t> bits_;
};

/// Number of set bits across a word span.
inline int popcount(std::span<const uint64_t> w) {
  int c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

inline int intersect_count(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace turan2d
