#include "turan2d/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>

#include "turan2d/canonical.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/enumerate.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"
#include "turan2d/lll.hpp"
#include "turan2d/prng.hpp"

namespace turan2d {

namespace {

using i128 = __int128;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

uint64_t ipow(uint64_t base, int exp) {
  uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int64_t choose2(int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

Graph forbidden_blowup_4() { return build({ConstructionSpec::ForbiddenBlowup{4}}); }

std::vector<std::string> all_classes_upto(int n_max, const PruneProfile& profile) {
  std::vector<std::string> keys;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_alpha_bounded(n, n, profile);
    keys.insert(keys.end(), level.begin(), level.end());
  }
  return keys;
}

}  // namespace

CheckReport check_equivalence_7_3(bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "equivalence-7-3";
  report.parameters = {{"n", "7"}, {"mutated", mutated ? "true" : "false"}};
  Graph blowup = forbidden_blowup_4();
  for (const std::string& key : enumerate_alpha_bounded(7, 7)) {
    Graph g = parse_graph6(key);
    ++report.instances_checked;
    if (clique_number_at_least(g, 4)) continue;
    if (!mutated && contains_subgraph(g, blowup)) continue;
    if (!independence_number_at_least(g, 3))
      report.add_counterexample(key, "K_4-free with alpha <= 2");
  }
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_clique_count_lower(int n_max, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "turan-lb";
  report.parameters = {{"n_max", std::to_string(n_max)}, {"mutated", mutated ? "true" : "false"}};
  if (n_max > 8) throw invalid_argument("turan-lb: n_max guarded to 8");
  for (const std::string& key : all_classes_upto(n_max, PruneProfile::none())) {
    Graph g = parse_graph6(key);
    ++report.instances_checked;
    const int n = g.order();
    int alpha = independence_number(g);
    if (mutated) --alpha;
    std::vector<uint64_t> t(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) t[i] = clique_count(g, i);
    for (int k = 2; k <= n + 1; ++k) {
      uint64_t tk = k <= n ? t[k] : 0;
      uint64_t tk1 = t[k - 1];
      if (tk1 == 0) continue;
      // t_k / t_{k-1} >= n / (k a^{k-1}) - 1, cross-multiplied
      i128 pw = static_cast<i128>(ipow(static_cast<uint64_t>(std::max(alpha, 0)), k - 1));
      i128 lhs = static_cast<i128>(tk) * k * pw;
      i128 rhs = static_cast<i128>(tk1) * (static_cast<i128>(n) - static_cast<i128>(k) * pw);
      if (lhs < rhs)
        report.add_counterexample(key, "k=" + std::to_string(k) + " alpha=" + std::to_string(alpha));
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_clique_count_upper(int n_max, int alpha_limit, std::vector<int> k_grid,
                                     bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "turan-ub";
  std::string kg;
  for (int k : k_grid) kg += (kg.empty() ? "" : ",") + std::to_string(k);
  report.parameters = {{"n_max", std::to_string(n_max)},
                       {"alpha_limit", std::to_string(alpha_limit)},
                       {"k_grid", kg},
                       {"mutated", mutated ? "true" : "false"}};
  if (n_max > 8) throw invalid_argument("turan-ub: n_max guarded to 8");
  for (const std::string& key : all_classes_upto(n_max, PruneProfile::none())) {
    Graph g = parse_graph6(key);
    ++report.instances_checked;
    int alpha_g = independence_number(g);
    for (int k : k_grid) {
      if (!mutated && clique_number_at_least(g, k)) continue;
      for (int a = alpha_g + 1; a <= alpha_limit; ++a) {
        for (int i = 1; i <= k; ++i) {
          uint64_t ti = clique_count(g, i);
          if (ti == 0) continue;
          int exponent = static_cast<int>(choose2(k) - choose2(k - i));
          uint64_t fact = 1;
          for (int f = 2; f <= i; ++f) fact *= f;
          i128 lhs = static_cast<i128>(ti) * fact;
          i128 rhs = 1;
          for (int e = 0; e < exponent; ++e) rhs *= a;
          if (lhs > rhs)
            report.add_counterexample(key, "k=" + std::to_string(k) + " alpha=" +
                                               std::to_string(a) + " i=" + std::to_string(i));
        }
      }
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

namespace {

struct Triple {
  int a, b, c;  // sorted

  bool disjoint(const Triple& o) const {
    return a != o.a && a != o.b && a != o.c && b != o.a && b != o.b && b != o.c && c != o.a &&
           c != o.b && c != o.c;
  }
};

// parts a-c of the apex-structure claim on one host; first violation only
std::optional<std::string> triangle_nbhd_violation(const Graph& g) {
  const int n = g.order();
  std::vector<Triple> triangles;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) triangles.push_back({a, b, c});
    }
  for (int v = 0; v < n; ++v) {
    // apex = triangle vertex opposite an edge lying inside N(v)
    std::map<int, std::vector<Triple>> apex_triangles;
    for (const Triple& t : triangles) {
      if (t.a == v || t.b == v || t.c == v) continue;
      auto consider = [&](int x, int y, int apex) {
        if (g.adjacent(v, x) && g.adjacent(v, y)) apex_triangles[apex].push_back(t);
      };
      consider(t.a, t.b, t.c);
      consider(t.a, t.c, t.b);
      consider(t.b, t.c, t.a);
    }
    std::vector<int> apexes;
    for (auto& [apex, list] : apex_triangles) apexes.push_back(apex);
    for (int apex : apexes)
      if (g.adjacent(v, apex))
        return "v=" + std::to_string(v) + " apex " + std::to_string(apex) + " inside N(v)";
    for (size_t i = 0; i < apexes.size(); ++i) {
      for (size_t j = i + 1; j < apexes.size(); ++j) {
        int u = apexes[i], w = apexes[j];
        if (!g.adjacent(u, w)) continue;
        for (const Triple& tu : apex_triangles[u])
          for (const Triple& tw : apex_triangles[w])
            if (tu.disjoint(tw))
              return "v=" + std::to_string(v) + " adjacent apexes " + std::to_string(u) + "," +
                     std::to_string(w) + " with disjoint triangles";
      }
    }
    for (size_t i = 0; i < apexes.size(); ++i)
      for (size_t j = i + 1; j < apexes.size(); ++j)
        for (size_t l = j + 1; l < apexes.size(); ++l)
          if (g.adjacent(apexes[i], apexes[j]) && g.adjacent(apexes[i], apexes[l]) &&
              g.adjacent(apexes[j], apexes[l]))
            return "v=" + std::to_string(v) + " triangle among apexes";
  }
  return std::nullopt;
}

}  // namespace

CheckReport check_triangle_nbhd(int n_max, int samples, uint64_t seed, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "triangle-nbhd";
  report.parameters = {{"n_max", std::to_string(n_max)},
                       {"samples", std::to_string(samples)},
                       {"seed", std::to_string(seed)},
                       {"mutated", mutated ? "true" : "false"}};
  Graph blowup = forbidden_blowup_4();
  PruneProfile k4free;
  k4free.id = "k4-free";
  k4free.clique_cap = 3;
  for (int n = 1; n <= n_max; ++n) {
    for (const std::string& key : enumerate_alpha_bounded(n, n, k4free)) {
      Graph g = parse_graph6(key);
      if (!mutated && contains_subgraph(g, blowup)) continue;
      ++report.instances_checked;
      if (auto bad = triangle_nbhd_violation(g)) report.add_counterexample(key, *bad);
    }
  }
  // seeded random hosts, filtered to the same hypotheses
  const int sizes[] = {8, 10, 12, 14};
  const double probs[] = {0.2, 0.3, 0.4};
  int accepted = 0;
  uint64_t attempt = 0;
  uint64_t max_attempts = static_cast<uint64_t>(samples) * 50 + 100;
  while (accepted < samples && attempt < max_attempts) {
    int n = sizes[attempt % 4];
    double p = probs[(attempt / 4) % 3];
    Graph g = sample_gnp(n, p, counter_hash(seed, attempt));
    ++attempt;
    if (clique_number_at_least(g, 4)) continue;
    if (!mutated && contains_subgraph(g, blowup)) continue;
    ++accepted;
    ++report.instances_checked;
    if (auto bad = triangle_nbhd_violation(g)) report.add_counterexample(to_graph6(g), *bad);
  }
  report.notes.push_back("random hosts drawn from G(n,p), n in {8,10,12,14}, p in {0.2,0.3,0.4}; " +
                         std::to_string(accepted) + " passed the hypothesis filter");
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_switching(int n_max, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "m2-switching";
  report.parameters = {{"n_max", std::to_string(n_max)}, {"mutated", mutated ? "true" : "false"}};
  if (n_max > 8) throw invalid_argument("m2-switching: n_max guarded to 8");
  for (const std::string& key : all_classes_upto(n_max, PruneProfile::none())) {
    Graph g = parse_graph6(key);
    const int n = g.order();
    if (n < 3) continue;
    ++report.instances_checked;
    std::vector<int> cls = transposition_equivalence_classes(g);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (cls[u] == cls[w]) pairs.emplace_back(u, w);
    if (pairs.empty()) continue;  // vacuous

    std::vector<uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;
    std::optional<Rational> best;
    std::vector<std::pair<int, uint32_t>> maximizers;  // (size, mask)
    const uint32_t total = uint32_t{1} << n;
    std::vector<uint8_t> edges(total, 0);
    for (uint32_t s = 1; s < total; ++s) {
      uint32_t rest = s & (s - 1);
      edges[s] =
          static_cast<uint8_t>(edges[rest] + std::popcount(rest & nbr[std::countr_zero(s)]));
      int size = std::popcount(s);
      if (size < 3) continue;
      Rational val(static_cast<int64_t>(edges[s]) - 1, size - 2);
      if (!best || val > *best) {
        best = val;
        maximizers.clear();
        maximizers.emplace_back(size, s);
      } else if (val == *best) {
        maximizers.emplace_back(size, s);
      }
    }
    int max_size = 0;
    for (auto& [size, mask] : maximizers) max_size = std::max(max_size, size);
    for (auto& [size, mask] : maximizers) {
      if (!mutated && size < max_size) continue;  // claim is about vertex-maximal ones
      for (auto& [u, w] : pairs) {
        bool has_u = (mask >> u) & 1, has_w = (mask >> w) & 1;
        if (has_u != has_w)
          report.add_counterexample(
              key, "maximizer splits equivalent pair (" + std::to_string(u) + "," +
                       std::to_string(w) + ") size=" + std::to_string(size));
      }
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_disjoint_union(int n_max, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "disjoint-union";
  report.parameters = {{"n_max", std::to_string(n_max)}, {"mutated", mutated ? "true" : "false"}};
  if (n_max > 6) throw invalid_argument("disjoint-union: n_max guarded to 6 per factor");
  std::vector<std::string> keys;
  for (int n = 3; n <= n_max; ++n) {
    auto level = enumerate_alpha_bounded(n, n);
    keys.insert(keys.end(), level.begin(), level.end());
  }
  std::vector<Graph> graphs;
  for (const auto& k : keys) graphs.push_back(parse_graph6(k));
  int necessity_noted = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i; j < graphs.size(); ++j) {
      const Graph& a = graphs[i];
      const Graph& b = graphs[j];
      bool hypothesis = 2 * a.edge_count() > a.order() && 2 * b.edge_count() > b.order();
      Rational bound = std::max(d2(a), d2(b));
      Rational united = d2(a.disjoint_union(b));
      if (hypothesis || mutated) {
        ++report.instances_checked;
        if (!(united < bound))
          report.add_counterexample(keys[i] + " + " + keys[j],
                                    "d2(union)=" + united.str() + " vs max=" + bound.str());
      } else if (!(united < bound) && necessity_noted < 5) {
        ++necessity_noted;
        report.notes.push_back("hypothesis necessity: " + keys[i] + " + " + keys[j] +
                               " gives d2(union)=" + united.str() + " >= max=" + bound.str());
      }
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_sparse_tf_bound(int n_max, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "sparse-tf-bound";
  report.parameters = {{"n_max", std::to_string(n_max)}, {"mutated", mutated ? "true" : "false"}};
  if (n_max > 10) throw invalid_argument("sparse-tf-bound: n_max guarded to 10");
  for (int n = 1; n <= n_max; ++n) {
    for (const std::string& key : enumerate_alpha_bounded(n, n, PruneProfile::host_triangle_free())) {
      Graph g = parse_graph6(key);
      if (degeneracy(g) > 3) continue;
      ++report.instances_checked;
      int r = independence_number(g) + (mutated ? -1 : 1);
      int64_t bound = 6 * static_cast<int64_t>(n) - 13 * static_cast<int64_t>(r) - 1;
      if (g.edge_count() < bound)
        report.add_counterexample(key, "e=" + std::to_string(g.edge_count()) + " < bound " +
                                           std::to_string(bound) + " (r=" + std::to_string(r) + ")");
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

CheckReport check_up_bip(std::vector<int> k_grid, bool mutated) {
  Timer timer;
  CheckReport report;
  report.check_id = "up-bip";
  std::string kg;
  for (int k : k_grid) kg += (kg.empty() ? "" : ",") + std::to_string(k);
  report.parameters = {{"k_grid", kg}, {"mutated", mutated ? "true" : "false"}};
  for (int k : k_grid) {
    if (k != 5 && k != 6) throw invalid_argument("up-bip: k_grid must lie in {5,6}");
    const int n = 2 * k - 1;
    for (const std::string& key :
         enumerate_alpha_bounded(n, n, PruneProfile::host_triangle_free())) {
      Graph g = parse_graph6(key);
      ++report.instances_checked;
      for (int t = 1; 2 * t * t < k - 1; ++t) {
        if (!mutated) {
          // hypothesis: every k-subset spans at least t+1 edges
          bool hypothesis = true;
          std::vector<int> subset(k);
          for (int i = 0; i < k; ++i) subset[i] = i;
          while (hypothesis) {
            int e = 0;
            for (int i = 0; i < k && e <= t; ++i)
              for (int j = i + 1; j < k; ++j)
                if (g.adjacent(subset[i], subset[j])) ++e;
            if (e < t + 1) hypothesis = false;
            // next combination
            int pos = k - 1;
            while (pos >= 0 && subset[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
          }
          if (!hypothesis) continue;
        }
        int64_t bound = static_cast<int64_t>(k - 1) * (k - 1) - static_cast<int64_t>(t) * t + 1;
        if (g.edge_count() > bound)
          report.add_counterexample(key, "t=" + std::to_string(t) + " e=" +
                                             std::to_string(g.edge_count()) + " > bound " +
                                             std::to_string(bound));
      }
    }
  }
  report.wall_time = timer.elapsed();
  return report;
}

std::vector<std::string> check_ids() {
  return {"equivalence-7-3", "turan-lb",       "turan-ub",        "triangle-nbhd",
          "m2-switching",    "disjoint-union", "sparse-tf-bound", "up-bip"};
}

std::string check_citation(const std::string& check_id) {
  if (check_id == "equivalence-7-3")
    return "any K_4-free graph also avoiding forbidden-blowup(4) has an independent 3-set "
           "among any 7 vertices";
  if (check_id == "turan-lb") return "t_k(G)/t_{k-1}(G) >= |G|/(k alpha^{k-1}) - 1";
  if (check_id == "turan-ub") return "t_i(G) <= alpha^{C(k,2)-C(k-i,2)} / i! for K_k-free G";
  if (check_id == "triangle-nbhd")
    return "triangle apexes over N(v) avoid N(v), are triangle-free, and apexes of disjoint "
           "triangles are non-adjacent";
  if (check_id == "m2-switching")
    return "the vertex-maximal densest subgraph takes equivalent vertex pairs both-or-none";
  if (check_id == "disjoint-union")
    return "d2(G+H) < max(d2(G), d2(H)) when 2e(G) > |G| and 2e(H) > |H|";
  if (check_id == "sparse-tf-bound")
    return "triangle-free 3-degenerate graphs with alpha < r have e >= 6m - 13r - 1";
  if (check_id == "up-bip")
    return "triangle-free on 2k-1 vertices with every k-subset spanning >= t+1 edges has "
           "e <= (k-1)^2 - t^2 + 1";
  throw invalid_argument("unknown check id '" + check_id + "'");
}

CheckReport run_check(const std::string& check_id, int /*jobs*/, uint64_t seed, bool mutated) {
  if (check_id == "equivalence-7-3") return check_equivalence_7_3(mutated);
  if (check_id == "turan-lb") return check_clique_count_lower(8, mutated);
  if (check_id == "turan-ub") return check_clique_count_upper(8, 6, {3, 4, 5, 6}, mutated);
  if (check_id == "triangle-nbhd") return check_triangle_nbhd(9, 1000, seed, mutated);
  if (check_id == "m2-switching") return check_switching(8, mutated);
  if (check_id == "disjoint-union") return check_disjoint_union(6, mutated);
  if (check_id == "sparse-tf-bound") return check_sparse_tf_bound(10, mutated);
  if (check_id == "up-bip") return check_up_bip({5}, mutated);
  throw invalid_argument("unknown check id '" + check_id + "'");
}

}  // namespace turan2d
