#include "turan2d/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "turan2d/graph6.hpp"

namespace turan2d {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by neighbor counts into every other
// cell until stable.  Sub-cells are ordered by count ascending, so the result
// depends only on the partition structure, never on vertex labels.
void refine(const Graph& g, Cells& cells) {
restart:
  for (size_t si = 0; si < cells.size(); ++si) {
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() <= 1) continue;
      std::vector<std::pair<int, int>> keyed;  // (count into splitter, vertex)
      keyed.reserve(cells[ci].size());
      for (int v : cells[ci]) {
        int cnt = 0;
        for (int u : cells[si])
          if (g.adjacent(u, v)) ++cnt;
        keyed.emplace_back(cnt, v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      if (keyed.front().first == keyed.back().first) continue;
      Cells parts;
      size_t idx = 0;
      while (idx < keyed.size()) {
        size_t j = idx;
        std::vector<int> part;
        while (j < keyed.size() && keyed[j].first == keyed[idx].first) part.push_back(keyed[j++].second);
        parts.push_back(std::move(part));
        idx = j;
      }
      cells.erase(cells.begin() + static_cast<long>(ci));
      cells.insert(cells.begin() + static_cast<long>(ci), parts.begin(), parts.end());
      goto restart;
    }
  }
}

struct LeafBits {
  std::vector<uint64_t> words;

  bool operator<(const LeafBits& o) const { return words < o.words; }
  bool operator==(const LeafBits& o) const { return words == o.words; }
};

struct CanonSearch {
  const Graph& g;
  int n;
  bool have_best = false;
  LeafBits best_bits;
  std::vector<int> best_perm;
  bool have_first = false;
  LeafBits first_bits;
  std::vector<int> first_perm;
  std::vector<std::vector<int>> generators;  // automorphisms, original labels

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  LeafBits leaf_bits(const std::vector<int>& perm) const {
    LeafBits b;
    b.words.assign((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if (g.adjacent(perm[i], perm[j])) b.words[k >> 6] |= uint64_t{1} << (63 - (k & 63));
    return b;
  }

  bool is_automorphism(const std::vector<int>& p) const {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.adjacent(i, j) != g.adjacent(p[i], p[j])) return false;
    return true;
  }

  void record_automorphism(const std::vector<int>& ref, const std::vector<int>& perm) {
    std::vector<int> gamma(n);
    for (int i = 0; i < n; ++i) gamma[ref[i]] = perm[i];
    bool identity = true;
    for (int i = 0; i < n; ++i)
      if (gamma[i] != i) {
        identity = false;
        break;
      }
    if (identity || !is_automorphism(gamma)) return;
    if (generators.size() < 256) generators.push_back(std::move(gamma));
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm;
    perm.reserve(n);
    for (const auto& c : cells) perm.push_back(c[0]);
    LeafBits bits = leaf_bits(perm);
    if (!have_first) {
      have_first = true;
      first_bits = bits;
      first_perm = perm;
    } else if (bits == first_bits) {
      record_automorphism(first_perm, perm);
    }
    if (!have_best || bits < best_bits) {
      have_best = true;
      best_bits = std::move(bits);
      best_perm = perm;
    } else if (bits == best_bits && perm != best_perm) {
      record_automorphism(best_perm, perm);
    }
  }

  // Orbit of v under generators fixing `prefix` pointwise.  Forward closure
  // suffices: generator inverses are reachable as powers.
  bool in_explored_orbit(int v, const std::vector<int>& prefix,
                         const std::vector<int>& explored) {
    if (explored.empty() || generators.empty()) return false;
    std::vector<const std::vector<int>*> applicable;
    for (const auto& gamma : generators) {
      bool fixes = true;
      for (int u : prefix)
        if (gamma[u] != u) {
          fixes = false;
          break;
        }
      if (fixes) applicable.push_back(&gamma);
    }
    if (applicable.empty()) return false;
    std::vector<char> in_orbit(n, 0);
    std::vector<int> queue{v};
    in_orbit[v] = 1;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (const auto* gamma : applicable) {
        int y = (*gamma)[x];
        if (!in_orbit[y]) {
          in_orbit[y] = 1;
          queue.push_back(y);
        }
      }
    }
    for (int u : explored)
      if (in_orbit[u]) return true;
    return false;
  }

  void dfs(Cells cells, std::vector<int>& prefix) {
    refine(g, cells);
    size_t target = cells.size();
    size_t target_size = static_cast<size_t>(n) + 1;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && cells[i].size() < target_size) {
        target = i;
        target_size = cells[i].size();
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    for (int v : cells[target]) {
      if (in_explored_orbit(v, prefix, explored)) {
        explored.push_back(v);
        continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[i])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }
};

}  // namespace

CanonicalResult canonical_form(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {Graph::empty(0), {}};
  CanonSearch search(g);
  Cells init(1);
  init[0].resize(n);
  std::iota(init[0].begin(), init[0].end(), 0);
  std::vector<int> prefix;
  search.dfs(std::move(init), prefix);
  return {g.permuted(search.best_perm), search.best_perm};
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g).canonical); }

std::vector<int> transposition_equivalence_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int words = g.row_words();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      // rows must agree once the bits at u and w themselves are masked out
      bool eq = true;
      auto ru = g.row(u), rw = g.row(w);
      for (int k = 0; k < words && eq; ++k) {
        uint64_t mask = ~uint64_t{0};
        if (k == (u >> 6)) mask &= ~(uint64_t{1} << (u & 63));
        if (k == (w >> 6)) mask &= ~(uint64_t{1} << (w & 63));
        if ((ru[k] & mask) != (rw[k] & mask)) eq = false;
      }
      if (eq) parent[find(u)] = find(w);
    }
  }
  std::vector<int> cls(n);
  std::vector<int> smallest(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (smallest[r] == -1) smallest[r] = v;
    cls[v] = smallest[r];
  }
  return cls;
}

}  // namespace turan2d
