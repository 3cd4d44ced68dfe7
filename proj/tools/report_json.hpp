#pragma once

#include <json.hpp>
#include <string>

#include "turan2d/enumerate.hpp"
#include "turan2d/lll.hpp"
#include "turan2d/rational.hpp"
#include "turan2d/verify.hpp"

namespace turan2d {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";

/// Fixed-order envelope shared by every subcommand; reports must be
/// byte-stable for fixed inputs, so key order never varies and timings are
/// only added on request.
inline ordered_json report_envelope(const std::string& subcommand, ordered_json params) {
  ordered_json j;
  j["schema"] = 1;
  j["tool"] = "turan2d";
  j["version"] = kToolVersion;
  j["subcommand"] = subcommand;
  j["params"] = std::move(params);
  return j;
}

inline ordered_json to_json(const SearchOutcome& o, bool timings) {
  ordered_json j;
  if (o.empty_outcome) {
    j["value"] = nullptr;
    j["empty"] = true;
  } else if (o.value_is_integer) {
    j["value"] = o.value.num();
  } else {
    j["value"] = o.value.str();
  }
  j["witnesses"] = o.witnesses;
  j["witness_total"] = o.witness_total;
  j["enumerated"] = o.enumerated;
  j["pruned"] = o.pruned;
  j["profile_citations"] = o.profile_citations;
  if (o.excluded_density_floor) j["excluded_density_floor"] = o.excluded_density_floor->str();
  if (timings) j["wall_time"] = o.wall_time;
  return j;
}

inline ordered_json to_json(const CheckReport& r, bool timings) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["citation"] = check_citation(r.check_id);
  j["passed"] = r.passed;
  j["instances_checked"] = r.instances_checked;
  ordered_json cex = ordered_json::array();
  for (const auto& [g6, context] : r.counterexamples) {
    ordered_json c;
    c["graph6"] = g6;
    c["context"] = context;
    cex.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cex);
  ordered_json params;
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (timings) j["wall_time"] = r.wall_time;
  return j;
}

inline ordered_json to_json(const ExperimentReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["r"] = r.r;
  j["reps"] = r.reps;
  j["seed"] = r.seed;
  j["family_size"] = r.family_size;
  j["min_density"] = r.min_density.str();
  j["n_grid"] = r.n_grid;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json x;
    x["n"] = row.n;
    x["rep"] = row.rep;
    x["accepted"] = row.accepted;
    if (row.alpha)
      x["alpha"] = *row.alpha;
    else
      x["alpha"] = nullptr;
    x["predicted_scale"] = row.predicted_scale;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  ordered_json sums = ordered_json::array();
  for (const auto& s : r.summaries) {
    ordered_json x;
    x["n"] = s.n;
    x["p"] = s.p;
    x["total"] = s.total;
    x["accepted"] = s.accepted;
    x["alpha_min"] = s.alpha_min ? ordered_json(*s.alpha_min) : ordered_json(nullptr);
    x["alpha_median"] = s.alpha_median ? ordered_json(*s.alpha_median) : ordered_json(nullptr);
    x["alpha_max"] = s.alpha_max ? ordered_json(*s.alpha_max) : ordered_json(nullptr);
    x["predicted_scale"] = s.predicted_scale;
    sums.push_back(std::move(x));
  }
  j["summaries"] = std::move(sums);
  return j;
}

}  // namespace turan2d
