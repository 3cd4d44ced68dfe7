#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan2d/graph.hpp"

namespace turan2d {

/// Outcome of one finitely-checkable claim: pass/fail, how many instances
/// were examined, and re-verifiable counterexamples when it failed.
struct CheckReport {
  std::string check_id;
  bool passed = true;
  uint64_t instances_checked = 0;
  std::vector<std::pair<std::string, std::string>> counterexamples;  // (graph6, context)
  std::vector<std::pair<std::string, std::string>> parameters;       // echoed settings
  std::vector<std::string> notes;
  double wall_time = 0.0;

  static constexpr size_t kCounterexampleCap = 20;

  void add_counterexample(const std::string& g6, const std::string& context) {
    passed = false;
    if (counterexamples.size() < kCounterexampleCap) counterexamples.emplace_back(g6, context);
  }
};

/// Every 7-vertex graph that is K_4-free and free of forbidden-blowup(4) has
/// an independent 3-set.  `mutated` drops the blowup-freeness hypothesis,
/// which must produce a counterexample.
CheckReport check_equivalence_7_3(bool mutated = false);

/// t_k/t_{k-1} >= |G|/(k alpha^(k-1)) - 1 over all classes on <= n_max
/// vertices, alpha = alpha(G).  `mutated` instantiates alpha one too low.
CheckReport check_clique_count_lower(int n_max, bool mutated = false);

/// t_i <= alpha^(C(k,2)-C(k-i,2)) / i! for K_k-free G with alpha(G) < alpha,
/// alpha up to alpha_limit, k over k_grid.  `mutated` drops K_k-freeness.
CheckReport check_clique_count_upper(int n_max, int alpha_limit = 6,
                                     std::vector<int> k_grid = {3, 4, 5, 6},
                                     bool mutated = false);

/// Neighborhood structure of triangle apexes in K_4-free hosts that also
/// avoid forbidden-blowup(4): apexes avoid N(v), apexes of disjoint triangles
/// are non-adjacent, and the apex set is triangle-free.  Exhaustive to n_max
/// plus seeded random hosts.  `mutated` drops the blowup-freeness filter.
CheckReport check_triangle_nbhd(int n_max, int samples, uint64_t seed, bool mutated = false);

/// Vertex-maximal densest subgraphs take equivalent vertex pairs both-or-none.
/// `mutated` demands the same of every densest subgraph, not just maximal ones.
CheckReport check_switching(int n_max, bool mutated = false);

/// d2(G ⊔ H) < max(d2(G), d2(H)) when both factors satisfy 2e > |V|.
/// `mutated` drops the 2e > |V| hypothesis.
CheckReport check_disjoint_union(int n_max, bool mutated = false);

/// e(G) >= 6m - 13r - 1 for triangle-free 3-degenerate G, with r = alpha+1.
/// `mutated` instantiates r = alpha - 1, below the legal range.
CheckReport check_sparse_tf_bound(int n_max, bool mutated = false);

/// Triangle-free G on 2k-1 vertices in which every k-subset spans >= t+1
/// edges has e(G) <= (k-1)^2 - t^2 + 1.  `mutated` drops the subset-edge
/// hypothesis.
CheckReport check_up_bip(std::vector<int> k_grid, bool mutated = false);

/// Runs a check by its stable id with default parameters.
CheckReport run_check(const std::string& check_id, int jobs = 1, uint64_t seed = 42,
                      bool mutated = false);

std::vector<std::string> check_ids();

/// Paper-claim citation line shipped with each check id.
std::string check_citation(const std::string& check_id);

}  // namespace turan2d
