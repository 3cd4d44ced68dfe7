#include "turan2d/invariants.hpp"

#include <algorithm>
#include <limits>

namespace turan2d {

namespace {

using Mask = std::vector<uint64_t>;

struct MaskOps {
  int words;

  bool test(const Mask& m, int v) const { return (m[v >> 6] >> (v & 63)) & 1u; }
  void clear(Mask& m, int v) const { m[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  void set(Mask& m, int v) const { m[v >> 6] |= uint64_t{1} << (v & 63); }
  int count(const Mask& m) const {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(m[w]);
    return c;
  }
  bool empty(const Mask& m) const {
    for (int w = 0; w < words; ++w)
      if (m[w]) return false;
    return true;
  }
  int first(const Mask& m) const {
    for (int w = 0; w < words; ++w)
      if (m[w]) return w * 64 + std::countr_zero(m[w]);
    return -1;
  }
  Mask full(int n) const {
    Mask m(words, 0);
    for (int v = 0; v < n; ++v) set(m, v);
    return m;
  }
};

// Tomita-style maximum clique: candidates are greedily colored, vertices are
// expanded in descending color order, and a branch is cut when the current
// clique plus the color bound cannot beat the incumbent.
struct CliqueSolver {
  const Graph& g;
  MaskOps ops;
  int best = 0;
  int stop_at;  // early exit once a clique of this size is found
  std::vector<int> best_set, cur;
  uint64_t nodes = 0;
  uint64_t node_budget;
  bool budget_exceeded = false;

  CliqueSolver(const Graph& graph, int stop, uint64_t budget = std::numeric_limits<uint64_t>::max())
      : g(graph), ops{graph.row_words()}, stop_at(stop), node_budget(budget) {}

  void intersect_row(Mask& dst, const Mask& src, int v) const {
    auto r = g.row(v);
    for (int w = 0; w < ops.words; ++w) dst[w] = src[w] & r[w];
  }

  void expand(Mask& cand) {
    if (++nodes > node_budget) {
      budget_exceeded = true;
      return;
    }
    // greedy coloring; `order` ends up sorted by color ascending
    std::vector<std::pair<int, int>> order;
    Mask uncolored = cand;
    int color = 0;
    while (!ops.empty(uncolored)) {
      ++color;
      Mask avail = uncolored;
      while (!ops.empty(avail)) {
        int v = ops.first(avail);
        order.emplace_back(v, color);
        ops.clear(uncolored, v);
        ops.clear(avail, v);
        auto r = g.row(v);
        for (int w = 0; w < ops.words; ++w) avail[w] &= ~r[w];
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      auto [v, c] = order[i];
      if (static_cast<int>(cur.size()) + c <= best) return;
      cur.push_back(v);
      Mask next(ops.words);
      intersect_row(next, cand, v);
      if (ops.empty(next)) {
        if (static_cast<int>(cur.size()) > best) {
          best = static_cast<int>(cur.size());
          best_set = cur;
        }
      } else {
        expand(next);
      }
      cur.pop_back();
      if (best >= stop_at || budget_exceeded) return;
      ops.clear(cand, v);
    }
  }

  int solve(Mask cand) {
    if (!ops.empty(cand)) {
      best = std::max(best, 1);  // a single vertex is a clique
      if (best_set.empty()) best_set = {ops.first(cand)};
      expand(cand);
    }
    return best;
  }
};

int omega_masked(const Graph& g, const Mask& mask, int stop_at) {
  CliqueSolver s(g, stop_at);
  return s.solve(mask);
}

// Independent set on g restricted to `mask`: degree-0/1 kernelization, then
// branching on a maximum-degree vertex.  Dense leftovers route through the
// clique solver on the complement.
struct MisSolver {
  const Graph& g;
  const Graph* comp = nullptr;  // lazily built complement
  Graph comp_storage;
  MaskOps ops;
  uint64_t nodes = 0;
  uint64_t node_budget;
  bool budget_exceeded = false;

  explicit MisSolver(const Graph& graph, uint64_t budget = std::numeric_limits<uint64_t>::max())
      : g(graph), ops{graph.row_words()}, node_budget(budget) {}

  int deg_in(const Mask& m, int v) const {
    auto r = g.row(v);
    int c = 0;
    for (int w = 0; w < ops.words; ++w) c += std::popcount(r[w] & m[w]);
    return c;
  }

  int solve(Mask m) {
    if (++nodes > node_budget) {
      budget_exceeded = true;
      return 0;
    }
    int taken = 0;
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int w = 0; w < ops.words && !reduced; ++w) {
        uint64_t x = m[w];
        while (x) {
          int v = w * 64 + std::countr_zero(x);
          x &= x - 1;
          int d = deg_in(m, v);
          if (d == 0) {
            ++taken;
            ops.clear(m, v);
            reduced = true;
          } else if (d == 1) {
            ++taken;
            auto r = g.row(v);
            for (int u = 0; u < ops.words; ++u) m[u] &= ~r[u];
            ops.clear(m, v);
            reduced = true;
            break;
          }
        }
      }
    }
    int remaining = ops.count(m);
    if (remaining == 0) return taken;
    if (remaining <= 48) {
      if (!comp) {
        comp_storage = g.complement();
        comp = &comp_storage;
      }
      CliqueSolver cs(*comp, remaining + 1, node_budget - std::min(node_budget, nodes));
      int sub = cs.solve(m);
      nodes += cs.nodes;
      if (cs.budget_exceeded) budget_exceeded = true;
      return taken + sub;
    }
    // branch on a max-degree vertex
    int pick = -1, pick_deg = -1;
    for (int w = 0; w < ops.words; ++w) {
      uint64_t x = m[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        int d = deg_in(m, v);
        if (d > pick_deg) {
          pick_deg = d;
          pick = v;
        }
      }
    }
    Mask without = m;
    ops.clear(without, pick);
    int a = solve(without);
    if (budget_exceeded) return 0;
    Mask without_nbhd = m;
    auto r = g.row(pick);
    for (int w = 0; w < ops.words; ++w) without_nbhd[w] &= ~r[w];
    ops.clear(without_nbhd, pick);
    int b = 1 + solve(without_nbhd);
    return taken + std::max(a, b);
  }
};

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  MaskOps ops{g.row_words()};
  return omega_masked(g, ops.full(g.order()), g.order() + 1);
}

bool clique_number_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.order()) return false;
  MaskOps ops{g.row_words()};
  return omega_masked(g, ops.full(g.order()), k) >= k;
}

int independence_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (n <= 48) return clique_number(g.complement());
  MisSolver s(g);
  MaskOps ops{g.row_words()};
  return s.solve(ops.full(n));
}

bool independence_number_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.order()) return false;
  if (g.order() <= 48) return clique_number_at_least(g.complement(), k);
  return independence_number(g) >= k;
}

std::vector<int> max_independent_set(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  if (n <= 48) {
    Graph c = g.complement();
    MaskOps ops{c.row_words()};
    CliqueSolver s(c, n + 1);
    s.solve(ops.full(n));
    std::sort(s.best_set.begin(), s.best_set.end());
    return s.best_set;
  }
  // peel a witness out of the exact value: v is in some maximum independent
  // set iff alpha(G - N[v]) = alpha(G) - 1
  Graph cur = g;
  std::vector<int> labels(n), out;
  for (int i = 0; i < n; ++i) labels[i] = i;
  int target = independence_number(g);
  while (target > 0) {
    int m = cur.order();
    for (int v = 0; v < m; ++v) {
      std::vector<int> keep;
      for (int u = 0; u < m; ++u)
        if (u != v && !cur.adjacent(u, v)) keep.push_back(u);
      Graph rest = cur.induced(keep);
      if (independence_number(rest) == target - 1) {
        out.push_back(labels[v]);
        std::vector<int> next_labels;
        for (int u : keep) next_labels.push_back(labels[u]);
        labels = std::move(next_labels);
        cur = std::move(rest);
        --target;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> independence_number_budgeted(const Graph& g, uint64_t max_nodes) {
  const int n = g.order();
  if (n == 0) return 0;
  MisSolver s(g, max_nodes);
  MaskOps ops{g.row_words()};
  int val = s.solve(ops.full(n));
  if (s.budget_exceeded) return std::nullopt;
  return val;
}

namespace {

uint64_t count_cliques_rec(const Graph& g, const Mask& cand, int from, int remaining,
                           const MaskOps& ops) {
  if (remaining == 0) return 1;
  uint64_t total = 0;
  for (int w = from >> 6; w < ops.words; ++w) {
    uint64_t x = cand[w];
    if (w == (from >> 6)) x &= ~((uint64_t{1} << (from & 63)) - 1);
    while (x) {
      int v = w * 64 + std::countr_zero(x);
      x &= x - 1;
      Mask next(ops.words);
      auto r = g.row(v);
      for (int u = 0; u < ops.words; ++u) next[u] = cand[u] & r[u];
      total += count_cliques_rec(g, next, v + 1, remaining - 1, ops);
    }
  }
  return total;
}

}  // namespace

uint64_t clique_count(const Graph& g, int i) {
  if (i < 1) throw invalid_argument("clique_count: i must be >= 1");
  if (i > g.order()) return 0;
  if (i == 1) return static_cast<uint64_t>(g.order());
  if (i == 2) return static_cast<uint64_t>(g.edge_count());
  MaskOps ops{g.row_words()};
  return count_cliques_rec(g, ops.full(g.order()), 0, i, ops);
}

int degeneracy(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int degen = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    degen = std::max(degen, deg[pick]);
    removed[pick] = true;
    for (int u : g.neighbors(pick))
      if (!removed[u]) --deg[u];
  }
  return degen;
}

namespace {

// DFS over m-subsets.  alpha of a partial subset only grows when vertices are
// added, so a partial whose alpha already reaches `cut` is dead.
struct SubsetScan {
  const Graph& g;
  int m;
  int best;  // current minimum (exclusive cut for pruning)
  std::vector<int> chosen;

  SubsetScan(const Graph& graph, int size, int init) : g(graph), m(size), best(init) {}

  void run(int from) {
    const int n = g.order();
    if (static_cast<int>(chosen.size()) == m) {
      Graph sub = g.induced(chosen);
      // exact value only matters below the incumbent
      int a = independence_number(sub);
      if (a < best) best = a;
      return;
    }
    int need = m - static_cast<int>(chosen.size());
    for (int v = from; v + need <= n; ++v) {
      chosen.push_back(v);
      if (static_cast<int>(chosen.size()) >= 3) {
        Graph sub = g.induced(chosen);
        if (independence_number_at_least(sub, best)) {
          chosen.pop_back();
          continue;
        }
      }
      run(v + 1);
      chosen.pop_back();
      if (best == 1) return;  // cannot go lower
    }
  }
};

}  // namespace

int local_independence_number(const Graph& g, int m) {
  const int n = g.order();
  if (m < 1 || m > n)
    throw invalid_argument("local_independence_number: m must satisfy 1 <= m <= n");
  if (m == n) return independence_number(g);
  if (n > 20)
    throw invalid_argument(
        "local_independence_number: full subset sweep limited to n <= 20; "
        "use local_independence_at_least with a threshold");
  std::vector<int> head(m);
  for (int i = 0; i < m; ++i) head[i] = i;
  SubsetScan scan(g, m, independence_number(g.induced(head)));
  scan.run(0);
  return scan.best;
}

namespace {

// looks for an m-subset with alpha <= r-1; prunes partials with alpha >= r
bool find_low_alpha_subset(const Graph& g, int m, int r, std::vector<int>& chosen, int from) {
  const int n = g.order();
  if (static_cast<int>(chosen.size()) == m)
    return !independence_number_at_least(g.induced(chosen), r);
  int need = m - static_cast<int>(chosen.size());
  for (int v = from; v + need <= n; ++v) {
    chosen.push_back(v);
    bool dead = static_cast<int>(chosen.size()) >= r &&
                independence_number_at_least(g.induced(chosen), r);
    if (!dead && find_low_alpha_subset(g, m, r, chosen, v + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool local_independence_at_least(const Graph& g, int m, int r) {
  const int n = g.order();
  if (m < 1 || m > n)
    throw invalid_argument("local_independence_at_least: m must satisfy 1 <= m <= n");
  if (r <= 1) return true;
  std::vector<int> chosen;
  return !find_low_alpha_subset(g, m, r, chosen, 0);
}

namespace {

struct EmbedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;         // pattern vertices in placement order
  std::vector<int> map;           // pattern -> host
  std::vector<bool> used;         // host vertex taken
  std::vector<int> host_degree;

  EmbedSearch(const Graph& host, const Graph& pat) : g(host), h(pat) {
    const int hn = h.order();
    map.assign(hn, -1);
    used.assign(g.order(), false);
    host_degree.resize(g.order());
    for (int v = 0; v < g.order(); ++v) host_degree[v] = g.degree(v);
    // place vertices with many already-placed neighbors first
    std::vector<bool> placed(hn, false);
    for (int step = 0; step < hn; ++step) {
      int pick = -1, pick_conn = -1, pick_deg = -1;
      for (int v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        int conn = 0;
        for (int u : h.neighbors(v))
          if (placed[u]) ++conn;
        int d = h.degree(v);
        if (conn > pick_conn || (conn == pick_conn && d > pick_deg)) {
          pick = v;
          pick_conn = conn;
          pick_deg = d;
        }
      }
      order.push_back(pick);
      placed[pick] = true;
    }
  }

  bool place(size_t idx) {
    if (idx == order.size()) return true;
    int p = order[idx];
    int pd = h.degree(p);
    for (int v = 0; v < g.order(); ++v) {
      if (used[v] || host_degree[v] < pd) continue;
      bool ok = true;
      for (int u : h.neighbors(p)) {
        if (map[u] >= 0 && !g.adjacent(v, map[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[p] = v;
      used[v] = true;
      if (place(idx + 1)) return true;
      map[p] = -1;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& h) {
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
  if (h.order() == 0) return std::vector<int>{};
  // quick degree-sequence reject
  std::vector<int> hd, gd;
  for (int v = 0; v < h.order(); ++v) hd.push_back(h.degree(v));
  for (int v = 0; v < g.order(); ++v) gd.push_back(g.degree(v));
  std::sort(hd.rbegin(), hd.rend());
  std::sort(gd.rbegin(), gd.rend());
  for (size_t i = 0; i < hd.size(); ++i)
    if (hd[i] > gd[i]) return std::nullopt;

  EmbedSearch s(g, h);
  if (!s.place(0)) return std::nullopt;
  return s.map;
}

bool contains_subgraph(const Graph& g, const Graph& h) {
  return find_subgraph_embedding(g, h).has_value();
}

}  // namespace turan2d
