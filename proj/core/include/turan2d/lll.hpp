#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan2d/density.hpp"
#include "turan2d/graph.hpp"
#include "turan2d/rational.hpp"

namespace turan2d {

/// Parameters for one random draw at the density where forbidding the family
/// still succeeds with positive probability: p = 1 / (48 t n^(1/M)) with
/// t the family size and M its minimum 2-density.
struct SampleParams {
  int n = 0;
  int m = 0;
  int r = 0;
  uint64_t seed = 0;
  int family_size = 0;
  Rational min_density;
  double p = 0.0;
  uint64_t threshold = 0;      // p as a 64-bit dyadic, fixed for reproducible draws
  double indep_threshold = 0;  // 8 log n / p + 2; reported, not enforced
};

SampleParams make_sample_params(int n, int m, int r, uint64_t seed, const ForbiddenFamily& fam);

/// The raw probability 1 / (48 t n^(1/M)); usable beyond the graph cap for
/// formula checks.
double lll_edge_probability(int n, int t, const Rational& min_density);

/// G(n, p) with a counter-based per-edge stream; identical (seed, n, p) give
/// identical graphs regardless of evaluation order.
Graph sample_gnp(int n, double p, uint64_t seed);

Graph sample_lll(const SampleParams& params);

struct LocalVerdict {
  bool ok = true;
  std::string violating_member;       // canonical graph6 of the embedded member
  std::vector<int> embedding;         // member vertex -> host vertex
};

/// True iff the host contains no family member; on failure reports the
/// member found and where it embeds.
LocalVerdict verify_local(const Graph& g, const ForbiddenFamily& fam);
LocalVerdict verify_local(const Graph& g, int m, int r);

struct ExperimentRow {
  int n = 0;
  int rep = 0;
  bool accepted = false;
  std::optional<int> alpha;  // only for accepted samples
  double predicted_scale = 0.0;
};

struct ExperimentSummary {
  int n = 0;
  int total = 0;
  int accepted = 0;
  std::optional<int> alpha_min, alpha_median, alpha_max;
  double predicted_scale = 0.0;
  double p = 0.0;
};

struct ExperimentReport {
  int m = 0, r = 0, reps = 0;
  uint64_t seed = 0;
  int family_size = 0;
  Rational min_density;
  std::vector<int> n_grid;
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentSummary> summaries;
};

/// Samples `reps` graphs per grid point, verifies the local property on each,
/// and reports independence-number statistics of the accepted ones next to
/// the predicted n^(1/M) * log n scale.
ExperimentReport experiment(int m, int r, const std::vector<int>& n_grid, int reps,
                            uint64_t seed, int jobs = 1);

}  // namespace turan2d
