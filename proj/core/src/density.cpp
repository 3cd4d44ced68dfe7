#include "turan2d/density.hpp"

#include <algorithm>
#include <map>

#include "turan2d/canonical.hpp"
#include "turan2d/enumerate.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"

namespace turan2d {

Rational d2(const Graph& g) {
  if (g.order() < 3) throw invalid_argument("d2: graph needs at least 3 vertices");
  return Rational(g.edge_count() - 1, g.order() - 2);
}

namespace {

std::vector<int> bits_of(uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// Full-subset sweep with an incremental edge-count table; n <= 20.
DensityResult m2_sweep(const Graph& g) {
  const int n = g.order();
  const uint32_t total = uint32_t{1} << n;
  std::vector<uint8_t> edges(total, 0);
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;

  std::optional<Rational> best;
  uint32_t best_mask = 0;
  for (uint32_t s = 1; s < total; ++s) {
    int low = std::countr_zero(s);
    uint32_t rest = s & (s - 1);
    edges[s] = static_cast<uint8_t>(edges[rest] + std::popcount(rest & nbr[low]));
    int size = std::popcount(s);
    if (size < 3) continue;
    Rational val(static_cast<int64_t>(edges[s]) - 1, size - 2);
    if (!best || val > *best) {
      best = val;
      best_mask = s;
    }
  }
  return {*best, bits_of(best_mask)};
}

// Subset search over transposition-equivalence blocks.  The vertex-maximal
// d2 maximizer contains each equivalent pair entirely or not at all, so for
// sizes >= 4 it is a union of blocks; size-3 subsets are swept directly.
std::optional<DensityResult> m2_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls = transposition_equivalence_classes(g);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (cls[v] == v) reps.push_back(v);
  const int b = static_cast<int>(reps.size());
  if (b >= n || b > 22) return std::nullopt;  // no symmetry to exploit / too many blocks

  std::vector<std::vector<int>> members(b);
  std::vector<int> block_of(n);
  for (int v = 0; v < n; ++v) {
    int idx = static_cast<int>(std::find(reps.begin(), reps.end(), cls[v]) - reps.begin());
    members[idx].push_back(v);
    block_of[v] = idx;
  }
  // pairwise edge counts, no uniformity assumption needed
  std::vector<std::vector<int64_t>> cross(b, std::vector<int64_t>(b, 0));
  std::vector<int64_t> internal(b, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) {
        if (block_of[u] == block_of[v])
          ++internal[block_of[u]];
        else
          ++cross[block_of[u]][block_of[v]], ++cross[block_of[v]][block_of[u]];
      }

  std::optional<Rational> best;
  uint32_t best_mask = 0;
  for (uint32_t s = 1; s < (uint32_t{1} << b); ++s) {
    int size = 0;
    int64_t e = 0;
    for (int i = 0; i < b; ++i) {
      if (!((s >> i) & 1)) continue;
      size += static_cast<int>(members[i].size());
      e += internal[i];
      for (int j = i + 1; j < b; ++j)
        if ((s >> j) & 1) e += cross[i][j];
    }
    if (size < 3) continue;
    Rational val(e - 1, size - 2);
    if (!best || val > *best) {
      best = val;
      best_mask = s;
    }
  }
  // size-3 subsets are not covered by the block argument
  std::vector<int> tri_witness;
  for (int a = 0; a < n; ++a)
    for (int bb = a + 1; bb < n; ++bb)
      for (int c = bb + 1; c < n; ++c) {
        int e = g.adjacent(a, bb) + g.adjacent(a, c) + g.adjacent(bb, c);
        Rational val(e - 1, 1);
        if (!best || val > *best) {
          best = val;
          best_mask = 0;
          tri_witness = {a, bb, c};
        }
      }
  std::vector<int> witness;
  if (best_mask) {
    for (int i = 0; i < b; ++i)
      if ((best_mask >> i) & 1)
        witness.insert(witness.end(), members[i].begin(), members[i].end());
    std::sort(witness.begin(), witness.end());
  } else {
    witness = tri_witness;
  }
  return DensityResult{*best, witness};
}

}  // namespace

std::pair<int, std::vector<int>> max_edges_at_size(const Graph& g, int s) {
  const int n = g.order();
  if (s < 3 || s > n) throw invalid_argument("max_edges_at_size: need 3 <= s <= |g|");

  struct BB {
    const Graph& g;
    int n, s;
    int best = -1;
    std::vector<int> best_set, cur;

    BB(const Graph& graph, int size) : g(graph), n(graph.order()), s(size) {}

    int edges_to_cur(int v) const {
      int c = 0;
      for (int u : cur) c += g.adjacent(u, v);
      return c;
    }

    // 2*UB on achievable edges: every chosen candidate contributes its edges
    // into the chosen set plus half of each candidate-candidate edge
    void run(int from, int e_cur) {
      int need = s - static_cast<int>(cur.size());
      if (need == 0) {
        if (e_cur > best) {
          best = e_cur;
          best_set = cur;
        }
        return;
      }
      if (n - from < need) return;
      std::vector<int> scores;
      for (int v = from; v < n; ++v) {
        int in_cur = edges_to_cur(v);
        int in_cand = 0;
        for (int u = from; u < n; ++u)
          if (u != v && g.adjacent(u, v)) ++in_cand;
        scores.push_back(2 * in_cur + in_cand);
      }
      std::partial_sort(scores.begin(), scores.begin() + need, scores.end(), std::greater<>());
      int ub2 = 2 * e_cur;
      for (int i = 0; i < need; ++i) ub2 += scores[i];
      if (ub2 < 2 * (best + 1)) return;
      // include `from`, then exclude it
      int gain = edges_to_cur(from);
      cur.push_back(from);
      run(from + 1, e_cur + gain);
      cur.pop_back();
      run(from + 1, e_cur);
    }
  };

  if (n <= 20) {
    // subset sweep is simpler and fast at this size
    const uint32_t total = uint32_t{1} << n;
    std::vector<uint8_t> edges(total, 0);
    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;
    int best = -1;
    uint32_t best_mask = 0;
    for (uint32_t m = 1; m < total; ++m) {
      uint32_t rest = m & (m - 1);
      edges[m] = static_cast<uint8_t>(edges[rest] + std::popcount(rest & nbr[std::countr_zero(m)]));
      if (std::popcount(m) == s && edges[m] > best) {
        best = edges[m];
        best_mask = m;
      }
    }
    return {best, bits_of(best_mask)};
  }
  BB bb(g, s);
  bb.run(0, 0);
  return {bb.best, bb.best_set};
}

DensityResult m2(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw invalid_argument("m2: graph needs at least 3 vertices");
  if (auto blocked = m2_blocks(g)) return *blocked;
  if (n <= 20) return m2_sweep(g);
  DensityResult best{d2(g), {}};
  for (int v = 0; v < n; ++v) best.witness.push_back(v);
  for (int s = 3; s < n; ++s) {
    auto [e, witness] = max_edges_at_size(g, s);
    Rational val(e - 1, s - 2);
    if (val > best.value) best = {val, witness};
  }
  return best;
}

bool is_strictly_2_balanced(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw invalid_argument("is_strictly_2_balanced: graph needs at least 3 vertices");
  Rational target = m2(g).value;
  if (d2(g) != target) return false;
  // every proper subgraph lives inside some one-vertex- or one-edge-deleted
  // subgraph, and m2 is monotone, so checking those suffices
  if (n >= 4) {
    std::vector<int> verts;
    for (int skip = 0; skip < n; ++skip) {
      verts.clear();
      for (int v = 0; v < n; ++v)
        if (v != skip) verts.push_back(v);
      if (m2(g.induced(verts)).value == target) return false;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (g.adjacent(a, b) && !(a == u && b == v)) edges.emplace_back(a, b);
      Graph minus = Graph::from_edges(n, edges);
      if (m2(minus).value == target) return false;
    }
  }
  return true;
}

Graph reduce_to_strictly_2_balanced(const Graph& h) {
  const int n = h.order();
  if (n < 3) throw invalid_argument("reduce_to_strictly_2_balanced: graph needs >= 3 vertices");
  if (n > 20) throw invalid_argument("reduce_to_strictly_2_balanced: guarded to n <= 20");
  Rational target = m2(h).value;

  // candidates: induced subsets attaining d2 == m2(h), largest first
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : h.neighbors(v)) nbr[v] |= uint32_t{1} << u;
  const uint32_t total = uint32_t{1} << n;
  std::vector<uint8_t> edges(total, 0);
  std::vector<std::pair<int, uint32_t>> candidates;  // (size, mask)
  for (uint32_t s = 1; s < total; ++s) {
    uint32_t rest = s & (s - 1);
    edges[s] = static_cast<uint8_t>(edges[rest] + std::popcount(rest & nbr[std::countr_zero(s)]));
    int size = std::popcount(s);
    if (size >= 3 && Rational(static_cast<int64_t>(edges[s]) - 1, size - 2) == target)
      candidates.emplace_back(size, s);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::optional<std::string> best_key;
  Graph best_graph;
  int best_size = -1;
  for (auto& [size, mask] : candidates) {
    if (best_size != -1 && size < best_size) break;  // smaller sizes cannot win
    Graph sub = h.induced(bits_of(mask));
    if (!is_strictly_2_balanced(sub)) continue;
    std::string key = canonical_key(sub);
    if (!best_key || key < *best_key) {
      best_key = key;
      best_graph = canonical_form(sub).canonical;
      best_size = size;
    }
  }
  // a minimum-size d2 attainer is always strictly 2-balanced, so this holds
  if (!best_key) throw std::logic_error("reduce_to_strictly_2_balanced: no candidate found");
  return best_graph;
}

ForbiddenFamily forbidden_family(int m, int r) {
  if (r < 2 || m < 2 * r - 1)
    throw invalid_argument("forbidden_family: need m >= 2r-1 >= 3");
  if (m > 10)
    throw invalid_argument("forbidden_family: enumeration infeasible beyond m = 10");

  std::map<std::string, Graph> reduced;  // canonical key -> member
  for (const std::string& key : enumerate_alpha_bounded(m, r - 1)) {
    Graph host = parse_graph6(key);
    Graph core = reduce_to_strictly_2_balanced(host);
    reduced.emplace(to_graph6(core), core);
  }
  // drop any member containing another member as a subgraph
  std::vector<std::pair<std::string, Graph>> all(reduced.begin(), reduced.end());
  std::vector<bool> dropped(all.size(), false);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j || dropped[i] || dropped[j]) continue;
      if (contains_subgraph(all[i].second, all[j].second)) {
        dropped[i] = true;
        break;
      }
    }

  ForbiddenFamily fam;
  fam.m = m;
  fam.r = r;
  std::optional<Rational> min_density;
  for (size_t i = 0; i < all.size(); ++i) {
    if (dropped[i]) continue;
    fam.members.push_back(all[i].second);
    fam.member_keys.push_back(all[i].first);
    Rational dens = d2(all[i].second);
    if (!min_density || dens < *min_density) min_density = dens;
  }
  fam.min_density = *min_density;
  return fam;
}

}  // namespace turan2d
