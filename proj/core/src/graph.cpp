#include "turan2d/graph.hpp"

#include <algorithm>

namespace turan2d {

namespace {
int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }
}  // namespace

Graph Graph::empty(int n) {
  if (n < 0 || n > kMaxVertices)
    throw invalid_argument("vertex count out of range [0, 512]: " + std::to_string(n));
  return Graph(n, words_for(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                             "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    g.set_edge(u, v);
  }
  g.recount_edges();
  return g;
}

void Graph::recount_edges() {
  int total = 0;
  for (uint64_t x : bits_) total += std::popcount(x);
  edge_count_ = total / 2;
}

int Graph::degree(int v) const { return popcount(row(v)); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_, words_);
  for (int v = 0; v < n_; ++v) {
    auto src = row(v);
    uint64_t* dst = g.bits_.data() + static_cast<size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) dst[w] = ~src[w];
    // clear diagonal and bits past n
    dst[v >> 6] &= ~(uint64_t{1} << (v & 63));
    if (n_ & 63) dst[words_ - 1] &= (uint64_t{1} << (n_ & 63)) - 1;
  }
  g.recount_edges();
  return g;
}

Graph Graph::induced(const std::vector<int>& verts) const {
  const int m = static_cast<int>(verts.size());
  Graph g(m, words_for(m));
  for (int i = 0; i < m; ++i) {
    if (verts[i] < 0 || verts[i] >= n_) throw invalid_argument("induced: vertex out of range");
    for (int j = i + 1; j < m; ++j) {
      if (verts[i] == verts[j]) throw invalid_argument("induced: duplicate vertex");
      if (adjacent(verts[i], verts[j])) g.set_edge(i, j);
    }
  }
  g.recount_edges();
  return g;
}

Graph Graph::induced_mask(std::span<const uint64_t> mask) const {
  std::vector<int> verts;
  for (size_t w = 0; w < mask.size(); ++w) {
    uint64_t x = mask[w];
    while (x) {
      verts.push_back(static_cast<int>(w) * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return induced(verts);
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw invalid_argument("permuted: size mismatch");
  Graph g(n_, words_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(perm[i], perm[j])) g.set_edge(i, j);
  g.recount_edges();
  return g;
}

Graph Graph::with_appended_vertex(const std::vector<int>& neigh) const {
  const int m = n_ + 1;
  if (m > kMaxVertices) throw invalid_argument("with_appended_vertex: over vertex cap");
  Graph g(m, words_for(m));
  for (int v = 0; v < n_; ++v) {
    auto src = row(v);
    uint64_t* dst = g.bits_.data() + static_cast<size_t>(v) * g.words_;
    std::copy(src.begin(), src.end(), dst);
  }
  for (int u : neigh) {
    if (u < 0 || u >= n_) throw invalid_argument("with_appended_vertex: bad neighbor");
    g.set_edge(u, n_);
  }
  g.recount_edges();
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  const int m = n_ + other.n_;
  Graph g(m, words_for(m));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) g.set_edge(u, v);
  for (int u = 0; u < other.n_; ++u)
    for (int v = u + 1; v < other.n_; ++v)
      if (other.adjacent(u, v)) g.set_edge(n_ + u, n_ + v);
  g.recount_edges();
  return g;
}

}  // namespace turan2d
