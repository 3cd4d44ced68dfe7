#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan2d/graph.hpp"
#include "turan2d/rational.hpp"

namespace turan2d {

constexpr int kGeneratorVersion = 1;

/// Optional search constraints.  Both caps are monotone under vertex
/// augmentation, so they prune partial graphs; each carries the implication
/// that justifies it in the final report.
struct PruneProfile {
  std::string id = "default";
  std::optional<int> clique_cap;  // keep only graphs with omega <= cap
  bool triangle_free = false;     // keep only triangle-free graphs
  /// Density that every excluded graph provably meets or exceeds; a search
  /// value below this bound is the true unconstrained minimum.
  std::optional<Rational> excluded_density_floor;
  std::vector<std::string> citations;

  static PruneProfile none();
  /// Excluded graphs contain a clique forcing m2 > `incumbent`.
  static PruneProfile incumbent_clique_cap(Rational incumbent, int m);
  static PruneProfile host_triangle_free();
  static PruneProfile parse(const std::string& id, int m, int r);
};

struct EnumStats {
  uint64_t pruned = 0;  // rejected vertex extensions across all levels
};

/// Canonical representatives (graph6, sorted) of all m-vertex graphs with
/// alpha <= alpha_max, one per isomorphism class, generated level by level
/// with canonical-key deduplication.  Unconstrained runs are guarded to
/// m <= 11; a restrictive profile extends the reach.
std::vector<std::string> enumerate_alpha_bounded(int m, int alpha_max,
                                                 const PruneProfile& profile = PruneProfile::none(),
                                                 EnumStats* stats = nullptr,
                                                 const std::string& cache_dir = "");

/// Isomorphism classes of all m-vertex graphs; m <= 8.
uint64_t count_classes(int m);

struct SearchOutcome {
  Rational value;
  bool value_is_integer = false;     // edge searches report a plain integer
  std::vector<std::string> witnesses;  // canonical graph6, sorted, capped at 100
  uint64_t witness_total = 0;
  uint64_t enumerated = 0;
  uint64_t pruned = 0;
  double wall_time = 0.0;
  std::vector<std::string> profile_citations;
  std::optional<Rational> excluded_density_floor;
  bool empty_outcome = false;  // no graph met the constraints
};

/// Minimum m2 over m-vertex graphs with alpha <= r-1 (the 2-density Turán
/// value when the profile excludes nothing below the reported value).  The
/// default profile prunes on cliques that already force m2 past a
/// runtime-verified constructed incumbent.
SearchOutcome min_m2(int m, int r, const PruneProfile& profile = PruneProfile{},
                     int jobs = 1, const std::string& cache_dir = "");

/// Minimum edge count over m-vertex graphs with alpha <= r-1 and m2 < cap.
SearchOutcome min_edges_under_m2_cap(int m, int r, const Rational& cap, int jobs = 1,
                                     const std::string& cache_dir = "");

}  // namespace turan2d
