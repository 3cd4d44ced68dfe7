#include "turan2d/enumerate.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>

#include "turan2d/canonical.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"
#include "turan2d/parallel.hpp"

namespace turan2d {

PruneProfile PruneProfile::none() {
  PruneProfile p;
  p.id = "none";
  return p;
}

PruneProfile PruneProfile::incumbent_clique_cap(Rational incumbent, int m) {
  // omega(G) >= s forces m2(G) >= m2(K_s) = (s+1)/2; graphs forced strictly
  // above the incumbent cannot attain the minimum
  int cap = 2;
  while (cap < m && Rational(cap + 2, 2) <= incumbent) ++cap;
  PruneProfile p;
  p.id = "clique-cap";
  p.clique_cap = cap;
  p.excluded_density_floor = Rational(cap + 2, 2);
  p.citations.push_back("a K_" + std::to_string(cap + 1) +
                        " subgraph forces m2 >= " + Rational(cap + 2, 2).str() +
                        " > incumbent " + incumbent.str());
  return p;
}

PruneProfile PruneProfile::host_triangle_free() {
  PruneProfile p;
  p.id = "triangle-free";
  p.triangle_free = true;
  p.excluded_density_floor = Rational(2);
  p.citations.push_back("a triangle forces m2 >= m2(K_3) = 2/1");
  return p;
}

PruneProfile PruneProfile::parse(const std::string& id, int /*m*/, int /*r*/) {
  if (id == "none") return none();
  if (id == "default" || id == "clique-cap") {
    PruneProfile p;
    p.id = "default";  // materialized by the search once an incumbent exists
    return p;
  }
  if (id == "triangle-free" || id == "host-triangle-free") return host_triangle_free();
  throw invalid_argument("unknown pruning profile '" + id + "'");
}

namespace {

namespace fs = std::filesystem;

struct Caps {
  int alpha_max;
  int omega_max;  // above m when unconstrained
};

// clique of size >= k inside `mask`, single-word adjacency rows
bool mask_clique_at_least(const std::vector<uint64_t>& rows, uint64_t mask, int k) {
  if (k <= 0) return true;
  if (std::popcount(mask) < k) return false;
  if (k == 1) return true;
  uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (mask_clique_at_least(rows, mask & rows[v] & ~((uint64_t{2} << v) - 1), k - 1))
      return true;
  }
  return false;
}

std::vector<std::string> generate_classes(int m, const Caps& caps, EnumStats* stats) {
  if (m == 0) return {to_graph6(Graph::empty(0))};
  std::vector<std::string> level = {to_graph6(Graph::empty(1))};
  for (int n = 1; n < m; ++n) {
    std::set<std::string> next;
    std::vector<uint64_t> rows(n), comp_rows(n);
    const uint64_t full = (uint64_t{1} << n) - 1;
    for (const std::string& key : level) {
      Graph parent = parse_graph6(key);
      for (int v = 0; v < n; ++v) {
        rows[v] = parent.row(v)[0];
        comp_rows[v] = ~rows[v] & full & ~(uint64_t{1} << v);
      }
      for (uint64_t s = 0; s <= full; ++s) {
        // new cliques and new independent sets all contain the new vertex
        bool ok = true;
        if (caps.omega_max <= n && std::popcount(s) >= caps.omega_max &&
            mask_clique_at_least(rows, s, caps.omega_max))
          ok = false;
        if (ok && caps.alpha_max <= n) {
          uint64_t non_neigh = full & ~s;
          if (std::popcount(non_neigh) >= caps.alpha_max &&
              mask_clique_at_least(comp_rows, non_neigh, caps.alpha_max))
            ok = false;
        }
        if (!ok) {
          if (stats) ++stats->pruned;
          continue;
        }
        std::vector<int> neigh;
        for (uint64_t x = s; x; x &= x - 1) neigh.push_back(std::countr_zero(x));
        next.insert(canonical_key(parent.with_appended_vertex(neigh)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

std::string cache_file(const std::string& dir, int m, int alpha_max) {
  return dir + "/alpha" + std::to_string(alpha_max) + "_n" + std::to_string(m) + ".g6";
}

bool try_load_cache(const std::string& dir, int m, int alpha_max,
                    std::vector<std::string>& out) {
  fs::path file = cache_file(dir, m, alpha_max);
  fs::path meta = file;
  meta += ".meta";
  std::ifstream mf(meta);
  if (!mf) return false;
  std::string line;
  std::getline(mf, line);
  if (line != "generator_version=" + std::to_string(kGeneratorVersion)) return false;
  std::ifstream f(file);
  if (!f) return false;
  out.clear();
  while (std::getline(f, line))
    if (!line.empty()) out.push_back(line);
  return true;
}

void save_cache(const std::string& dir, int m, int alpha_max,
                const std::vector<std::string>& keys) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  fs::path file = cache_file(dir, m, alpha_max);
  std::ofstream f(file);
  for (const auto& k : keys) f << k << "\n";
  fs::path meta = file;
  meta += ".meta";
  std::ofstream mf(meta);
  mf << "generator_version=" << kGeneratorVersion << "\n";
}

}  // namespace

std::vector<std::string> enumerate_alpha_bounded(int m, int alpha_max,
                                                 const PruneProfile& profile, EnumStats* stats,
                                                 const std::string& cache_dir) {
  if (m < 0 || m > 24) throw invalid_argument("enumerate_alpha_bounded: m out of range");
  if (alpha_max < 0) throw invalid_argument("enumerate_alpha_bounded: alpha_max < 0");
  if (alpha_max == 0 && m > 0) return {};
  Caps caps{alpha_max, profile.clique_cap.value_or(Graph::kMaxVertices + 1)};
  if (profile.triangle_free) caps.omega_max = std::min(caps.omega_max, 2);
  bool unconstrained = alpha_max >= m && caps.omega_max > m;
  if (unconstrained && m > 11)
    throw invalid_argument(
        "enumerate_alpha_bounded: unconstrained enumeration guarded to m <= 11");
  bool plain = caps.omega_max > m;  // cache only the profile-free streams
  if (plain && !cache_dir.empty()) {
    std::vector<std::string> cached;
    if (try_load_cache(cache_dir, m, alpha_max, cached)) return cached;
  }
  std::vector<std::string> keys = generate_classes(m, caps, stats);
  if (plain && !cache_dir.empty()) save_cache(cache_dir, m, alpha_max, keys);
  return keys;
}

uint64_t count_classes(int m) {
  if (m < 0 || m > 8) throw invalid_argument("count_classes: guarded to m <= 8");
  return enumerate_alpha_bounded(m, m).size();
}

namespace {

// runtime-verified upper-bound candidates for min m2 over the search class
Rational search_incumbent(int m, int r) {
  std::vector<ConstructionSpec> seeds;
  seeds.push_back({ConstructionSpec::TuranComplement{m, r - 1}});
  if (r == 3 && m % 2 == 1 && (m + 1) / 2 >= 4)
    seeds.push_back({ConstructionSpec::OddOptimal{(m + 1) / 2}});
  std::optional<Rational> best;
  for (const auto& spec : seeds) {
    Graph g = build(spec);
    if (g.order() != m) continue;
    if (independence_number_at_least(g, r)) continue;  // seed must satisfy alpha <= r-1
    Rational val = m2(g).value;
    if (!best || val < *best) best = val;
  }
  if (!best) throw std::logic_error("min_m2: no valid incumbent seed");
  return *best;
}

struct Evaluation {
  Rational value;
  std::vector<std::string> attaining;
};

}  // namespace

SearchOutcome min_m2(int m, int r, const PruneProfile& profile, int jobs,
                     const std::string& cache_dir) {
  if (r < 2 || m < 2 * r - 1)
    throw invalid_argument("min_m2: need m >= 2r-1 >= 3");
  auto t0 = std::chrono::steady_clock::now();

  PruneProfile active = profile;
  if (active.id == "default")
    active = PruneProfile::incumbent_clique_cap(search_incumbent(m, r), m);

  EnumStats stats;
  std::vector<std::string> keys = enumerate_alpha_bounded(m, r - 1, active, &stats, cache_dir);

  std::vector<Rational> values(keys.size(), Rational(0));
  parallel_for(keys.size(), jobs,
               [&](size_t i) { values[i] = m2(parse_graph6(keys[i])).value; });

  SearchOutcome out;
  out.enumerated = keys.size();
  out.pruned = stats.pruned;
  out.profile_citations = active.citations;
  out.excluded_density_floor = active.excluded_density_floor;
  std::optional<Rational> best;
  for (size_t i = 0; i < keys.size(); ++i)
    if (!best || values[i] < *best) best = values[i];
  if (!best) {
    out.empty_outcome = true;
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  out.value = *best;
  for (size_t i = 0; i < keys.size(); ++i)
    if (values[i] == *best) {
      ++out.witness_total;
      if (out.witnesses.size() < 100) out.witnesses.push_back(keys[i]);
    }
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SearchOutcome min_edges_under_m2_cap(int m, int r, const Rational& cap, int jobs,
                                     const std::string& cache_dir) {
  if (r < 2 || m < 2 * r - 1)
    throw invalid_argument("min_edges_under_m2_cap: need m >= 2r-1 >= 3");
  if (cap <= Rational(0)) throw invalid_argument("min_edges_under_m2_cap: cap must be positive");
  auto t0 = std::chrono::steady_clock::now();

  // a clique K_s with (s+1)/2 >= cap already violates m2 < cap, so pruning
  // on it loses nothing
  PruneProfile active;
  active.id = "m2-cap";
  int s = 2;
  while (s < m && Rational(s + 2, 2) < cap) ++s;
  active.clique_cap = s;
  active.citations.push_back("a K_" + std::to_string(s + 1) + " subgraph forces m2 >= " +
                             Rational(s + 2, 2).str() + " >= cap " + cap.str());

  EnumStats stats;
  std::vector<std::string> keys = enumerate_alpha_bounded(m, r - 1, active, &stats, cache_dir);

  std::vector<std::optional<int>> edge_counts(keys.size());
  parallel_for(keys.size(), jobs, [&](size_t i) {
    Graph g = parse_graph6(keys[i]);
    if (m2(g).value < cap) edge_counts[i] = g.edge_count();
  });

  SearchOutcome out;
  out.value_is_integer = true;
  out.enumerated = keys.size();
  out.pruned = stats.pruned;
  out.profile_citations = active.citations;
  std::optional<int> best;
  for (const auto& e : edge_counts)
    if (e && (!best || *e < *best)) best = *e;
  if (!best) {
    out.empty_outcome = true;
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  out.value = Rational(*best);
  for (size_t i = 0; i < keys.size(); ++i)
    if (edge_counts[i] && *edge_counts[i] == *best) {
      ++out.witness_total;
      if (out.witnesses.size() < 100) out.witnesses.push_back(keys[i]);
    }
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace turan2d
