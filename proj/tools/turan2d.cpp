#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report_json.hpp"
#include "turan2d/canonical.hpp"
#include "turan2d/constructions.hpp"
#include "turan2d/density.hpp"
#include "turan2d/enumerate.hpp"
#include "turan2d/graph6.hpp"
#include "turan2d/invariants.hpp"
#include "turan2d/lll.hpp"
#include "turan2d/verify.hpp"

namespace {

using namespace turan2d;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
  }
};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<int> parse_grid(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw invalid_argument("empty grid");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal graph toolkit: independence-local properties, "
               "2-density searches, lemma verification, random sampling"};
  app.require_subcommand(1);

  std::string g6_arg, spec_arg, cap_arg, profile_arg = "default", out_path, format = "json";
  std::string cache_dir;
  if (const char* env = std::getenv("TURAN2D_CACHE")) cache_dir = env;
  int m_arg = 0, r_arg = 0, n_single = 0, alpha_max = -1, reps = 20, jobs = 1;
  uint64_t seed = 1;
  bool timings = false;
  std::string grid_arg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    cmd->add_option("--jobs", jobs, "worker count")->capture_default_str();
    cmd->add_flag("--timings", timings, "include wall_time fields in reports");
  };

  auto* inv = app.add_subcommand("invariants", "exact invariants of one graph");
  inv->add_option("--g6", g6_arg, "graph6 input")->required();
  inv->add_option("--m", m_arg, "also report the m-local independence number");
  add_common(inv);

  auto* m2cmd = app.add_subcommand("m2", "exact 2-density with witness subset");
  m2cmd->add_option("--g6", g6_arg, "graph6 input")->required();
  add_common(m2cmd);

  auto* con = app.add_subcommand("construct", "build a parametric graph family member");
  con->add_option("--spec", spec_arg, "construction string, e.g. odd-optimal:k=5")->required();
  con->add_option("--format", format, "json | g6")->capture_default_str();
  add_common(con);

  auto* enu = app.add_subcommand("enumerate", "isomorph-free classes with bounded independence");
  enu->add_option("--m", m_arg, "vertex count")->required();
  enu->add_option("--r", r_arg, "bound alpha <= r-1");
  enu->add_option("--alpha-max", alpha_max, "bound alpha <= alpha-max (overrides --r)");
  enu->add_option("--format", format, "json | g6")->capture_default_str();
  enu->add_option("--cache", cache_dir, "cache directory (or TURAN2D_CACHE)");
  add_common(enu);

  auto* sm2 = app.add_subcommand("search-m2", "minimum 2-density over m-vertex, alpha <= r-1");
  sm2->add_option("--m", m_arg)->required();
  sm2->add_option("--r", r_arg)->required();
  sm2->add_option("--profile", profile_arg, "none | default | triangle-free")
      ->capture_default_str();
  sm2->add_option("--cache", cache_dir, "cache directory (or TURAN2D_CACHE)");
  add_common(sm2);

  auto* sed = app.add_subcommand("search-edges",
                                 "minimum edges over m-vertex, alpha <= r-1, m2 < cap");
  sed->add_option("--m", m_arg)->required();
  sed->add_option("--r", r_arg)->required();
  sed->add_option("--cap", cap_arg, "rational cap, e.g. 3 or 5/2")->required();
  sed->add_option("--cache", cache_dir, "cache directory (or TURAN2D_CACHE)");
  add_common(sed);

  std::string check_arg = "all";
  bool mutated = false;
  auto* ver = app.add_subcommand("verify", "run finitely-checkable lemma verifications");
  ver->add_option("check", check_arg, "check id or 'all'")->capture_default_str();
  ver->add_option("--seed", seed, "seed for randomized instances")->capture_default_str();
  ver->add_flag("--mutated", mutated, "run the deliberately falsified variant");
  add_common(ver);

  auto* sam = app.add_subcommand("sample", "one random graph at the family-forbidding density");
  sam->add_option("--n", n_single, "vertex count")->required();
  sam->add_option("--m", m_arg)->required();
  sam->add_option("--r", r_arg)->required();
  sam->add_option("--seed", seed)->capture_default_str();
  sam->add_option("--format", format, "json | g6")->capture_default_str();
  add_common(sam);

  auto* exp = app.add_subcommand("experiment", "sampling sweep with local verification");
  exp->add_option("--m", m_arg)->required();
  exp->add_option("--r", r_arg)->required();
  exp->add_option("--n", grid_arg, "comma-separated grid, e.g. 64,128,256")->required();
  exp->add_option("--reps", reps, "replicates per grid point")->capture_default_str();
  exp->add_option("--seed", seed)->capture_default_str();
  exp->add_option("--format", format, "json | csv")->capture_default_str();
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out{out_path};
  try {
    if (inv->parsed()) {
      Graph g = parse_graph6(g6_arg);
      ordered_json params{{"g6", g6_arg}};
      if (m_arg) params["m"] = m_arg;
      ordered_json j = report_envelope("invariants", params);
      j["n"] = g.order();
      j["edges"] = g.edge_count();
      j["alpha"] = independence_number(g);
      j["omega"] = clique_number(g);
      j["degeneracy"] = degeneracy(g);
      ordered_json counts = ordered_json::array();
      for (int i = 1; i <= g.order(); ++i) counts.push_back(clique_count(g, i));
      j["clique_counts"] = counts;
      j["canonical"] = canonical_key(g);
      if (m_arg) j["local_independence"] = local_independence_number(g, m_arg);
      out.write(dump(j));
    } else if (m2cmd->parsed()) {
      Graph g = parse_graph6(g6_arg);
      ordered_json j = report_envelope("m2", {{"g6", g6_arg}});
      j["d2"] = d2(g).str();
      DensityResult res = m2(g);
      j["m2"] = res.value.str();
      j["witness"] = res.witness;
      out.write(dump(j));
    } else if (con->parsed()) {
      ConstructionSpec spec = ConstructionSpec::parse(spec_arg);
      Graph g = build(spec);
      if (format == "g6") {
        out.write(to_graph6(g) + "\n");
      } else {
        ExpectedStats st = expected_stats(spec);
        ordered_json j = report_envelope("construct", {{"spec", spec.str()}});
        j["graph6"] = to_graph6(g);
        j["canonical"] = canonical_key(g);
        j["vertices"] = g.order();
        j["edges"] = g.edge_count();
        j["alpha"] = independence_number(g);
        ordered_json ex;
        ex["vertices"] = st.vertices;
        ex["edges"] = st.edges;
        ex["alpha_upper"] = st.alpha_upper ? ordered_json(*st.alpha_upper) : ordered_json(nullptr);
        ex["two_density"] =
            st.two_density ? ordered_json(st.two_density->str()) : ordered_json(nullptr);
        j["expected"] = std::move(ex);
        if (g.order() >= 3) j["m2"] = m2(g).value.str();
        out.write(dump(j));
      }
    } else if (enu->parsed()) {
      int amax = alpha_max >= 0 ? alpha_max : (r_arg > 0 ? r_arg - 1 : m_arg);
      auto keys = enumerate_alpha_bounded(m_arg, amax, PruneProfile::none(), nullptr, cache_dir);
      if (format == "g6") {
        std::string lines;
        for (const auto& k : keys) lines += k + "\n";
        out.write(lines);
      } else {
        ordered_json j = report_envelope(
            "enumerate", {{"m", m_arg}, {"alpha_max", amax}, {"cache", cache_dir}});
        j["count"] = keys.size();
        j["classes"] = keys;
        out.write(dump(j));
      }
    } else if (sm2->parsed()) {
      PruneProfile profile = PruneProfile::parse(profile_arg, m_arg, r_arg);
      SearchOutcome o = min_m2(m_arg, r_arg, profile, jobs, cache_dir);
      ordered_json j = report_envelope(
          "search-m2",
          {{"m", m_arg}, {"r", r_arg}, {"profile", profile_arg}, {"cache", cache_dir}});
      j.update(to_json(o, timings));
      out.write(dump(j));
      std::cerr << "search-m2 m=" << m_arg << " r=" << r_arg << " took " << o.wall_time << "s\n";
    } else if (sed->parsed()) {
      Rational cap = Rational::parse(cap_arg);
      SearchOutcome o = min_edges_under_m2_cap(m_arg, r_arg, cap, jobs, cache_dir);
      ordered_json j = report_envelope(
          "search-edges",
          {{"m", m_arg}, {"r", r_arg}, {"cap", cap.str()}, {"cache", cache_dir}});
      j.update(to_json(o, timings));
      out.write(dump(j));
      std::cerr << "search-edges m=" << m_arg << " r=" << r_arg << " took " << o.wall_time
                << "s\n";
    } else if (ver->parsed()) {
      std::vector<std::string> ids =
          check_arg == "all" ? check_ids() : std::vector<std::string>{check_arg};
      ordered_json reports = ordered_json::array();
      bool all_passed = true;
      for (const auto& id : ids) {
        CheckReport r = run_check(id, jobs, seed, mutated);
        all_passed = all_passed && r.passed;
        reports.push_back(to_json(r, timings));
        std::cerr << "check " << id << (r.passed ? " passed" : " FAILED") << " ("
                  << r.instances_checked << " instances, " << r.wall_time << "s)\n";
      }
      ordered_json j = report_envelope(
          "verify", {{"check", check_arg}, {"seed", seed}, {"mutated", mutated}});
      j["reports"] = std::move(reports);
      j["passed"] = all_passed;
      out.write(dump(j));
      return all_passed ? 0 : 1;
    } else if (sam->parsed()) {
      ForbiddenFamily fam = forbidden_family(m_arg, r_arg);
      SampleParams params = make_sample_params(n_single, m_arg, r_arg, seed, fam);
      Graph g = sample_lll(params);
      if (format == "g6") {
        out.write(to_graph6(g) + "\n");
      } else {
        ordered_json j = report_envelope(
            "sample", {{"n", n_single}, {"m", m_arg}, {"r", r_arg}, {"seed", seed}});
        j["family_size"] = params.family_size;
        j["min_density"] = params.min_density.str();
        j["p"] = params.p;
        j["indep_threshold"] = params.indep_threshold;
        j["graph6"] = to_graph6(g);
        j["edges"] = g.edge_count();
        LocalVerdict v = verify_local(g, fam);
        j["local_ok"] = v.ok;
        if (!v.ok) j["violating_member"] = v.violating_member;
        out.write(dump(j));
      }
    } else if (exp->parsed()) {
      ExperimentReport r = experiment(m_arg, r_arg, parse_grid(grid_arg), reps, seed, jobs);
      if (format == "csv") {
        std::ostringstream csv;
        csv << "n,rep,accepted,alpha,predicted_scale\n";
        for (const auto& row : r.rows) {
          csv << row.n << "," << row.rep << "," << (row.accepted ? 1 : 0) << ",";
          if (row.alpha) csv << *row.alpha;
          csv << "," << row.predicted_scale << "\n";
        }
        out.write(csv.str());
      } else {
        ordered_json j = report_envelope("experiment", {{"m", m_arg},
                                                        {"r", r_arg},
                                                        {"n", grid_arg},
                                                        {"reps", reps},
                                                        {"seed", seed}});
        j.update(to_json(r));
        out.write(dump(j));
      }
    }
  } catch (const invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
