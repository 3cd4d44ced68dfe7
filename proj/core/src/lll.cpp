#include "turan2d/lll.hpp"

#include <algorithm>
#include <cmath>

#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"
#include "turan2d/parallel.hpp"
#include "turan2d/prng.hpp"

namespace turan2d {

namespace {

uint64_t dyadic_threshold(double p) {
  if (p <= 0.0 || p >= 1.0) throw invalid_argument("edge probability must lie in (0,1)");
  return static_cast<uint64_t>(std::ldexp(p, 64));
}

constexpr uint64_t kAlphaNodeBudget = 200'000'000;

}  // namespace

double lll_edge_probability(int n, int t, const Rational& min_density) {
  double exponent = static_cast<double>(min_density.den()) / static_cast<double>(min_density.num());
  return 1.0 / (48.0 * t * std::pow(static_cast<double>(n), exponent));
}

SampleParams make_sample_params(int n, int m, int r, uint64_t seed, const ForbiddenFamily& fam) {
  if (r < 2 || m < 2 * r - 1) throw invalid_argument("sample params: need m >= 2r-1 >= 3");
  if (n < m) throw invalid_argument("sample params: need n >= m");
  if (n > Graph::kMaxVertices)
    throw invalid_argument("sample params: n exceeds the 512-vertex graph cap");
  SampleParams p;
  p.n = n;
  p.m = m;
  p.r = r;
  p.seed = seed;
  p.family_size = static_cast<int>(fam.size());
  p.min_density = fam.min_density;
  p.p = lll_edge_probability(n, p.family_size, fam.min_density);
  p.threshold = dyadic_threshold(p.p);
  p.indep_threshold = 8.0 * std::log(static_cast<double>(n)) / p.p + 2.0;
  return p;
}

Graph sample_gnp(int n, double p, uint64_t seed) {
  uint64_t threshold = dyadic_threshold(p);
  std::vector<std::pair<int, int>> edges;
  uint64_t idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (counter_hash(seed, idx) < threshold) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph sample_lll(const SampleParams& params) {
  std::vector<std::pair<int, int>> edges;
  uint64_t idx = 0;
  for (int v = 1; v < params.n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (counter_hash(params.seed, idx) < params.threshold) edges.emplace_back(u, v);
  return Graph::from_edges(params.n, edges);
}

LocalVerdict verify_local(const Graph& g, const ForbiddenFamily& fam) {
  if (g.order() < fam.m) throw invalid_argument("verify_local: host smaller than m");
  for (size_t i = 0; i < fam.members.size(); ++i) {
    if (auto emb = find_subgraph_embedding(g, fam.members[i])) {
      LocalVerdict v;
      v.ok = false;
      v.violating_member = fam.member_keys[i];
      v.embedding = *emb;
      return v;
    }
  }
  return {};
}

LocalVerdict verify_local(const Graph& g, int m, int r) {
  return verify_local(g, forbidden_family(m, r));
}

ExperimentReport experiment(int m, int r, const std::vector<int>& n_grid, int reps,
                            uint64_t seed, int jobs) {
  if (reps < 0) throw invalid_argument("experiment: reps < 0");
  ForbiddenFamily fam = forbidden_family(m, r);
  ExperimentReport report;
  report.m = m;
  report.r = r;
  report.reps = reps;
  report.seed = seed;
  report.family_size = static_cast<int>(fam.size());
  report.min_density = fam.min_density;
  report.n_grid = n_grid;

  for (int n : n_grid)
    for (int rep = 0; rep < reps; ++rep)
      report.rows.push_back({n, rep, false, std::nullopt, 0.0});

  double exponent =
      static_cast<double>(fam.min_density.den()) / static_cast<double>(fam.min_density.num());
  parallel_for(report.rows.size(), jobs, [&](size_t i) {
    ExperimentRow& row = report.rows[i];
    uint64_t rep_seed = counter_hash(counter_hash(seed, static_cast<uint64_t>(row.n)),
                                     static_cast<uint64_t>(row.rep));
    SampleParams params = make_sample_params(row.n, m, r, rep_seed, fam);
    Graph g = sample_lll(params);
    row.predicted_scale =
        std::pow(static_cast<double>(row.n), exponent) * std::log(static_cast<double>(row.n));
    row.accepted = verify_local(g, fam).ok;
    if (row.accepted) row.alpha = independence_number_budgeted(g, kAlphaNodeBudget);
  });

  for (int n : n_grid) {
    ExperimentSummary s;
    s.n = n;
    s.predicted_scale =
        std::pow(static_cast<double>(n), exponent) * std::log(static_cast<double>(n));
    s.p = lll_edge_probability(n, static_cast<int>(fam.size()), fam.min_density);
    std::vector<int> alphas;
    for (const auto& row : report.rows) {
      if (row.n != n) continue;
      ++s.total;
      if (row.accepted) {
        ++s.accepted;
        if (row.alpha) alphas.push_back(*row.alpha);
      }
    }
    if (!alphas.empty()) {
      std::sort(alphas.begin(), alphas.end());
      s.alpha_min = alphas.front();
      s.alpha_median = alphas[alphas.size() / 2];
      s.alpha_max = alphas.back();
    }
    report.summaries.push_back(s);
  }
  return report;
}

}  // namespace turan2d
