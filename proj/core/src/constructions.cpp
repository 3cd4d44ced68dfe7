#include "turan2d/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace turan2d {

namespace {

int64_t choose2(int64_t s) { return s * (s - 1) / 2; }

Graph build_blowup(const std::vector<int>& parts) {
  if (parts.size() != 5) throw invalid_argument("c5-blowup: exactly 5 parts required");
  for (int p : parts)
    if (p < 1) throw invalid_argument("c5-blowup: part sizes must be positive");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> start(6, 0);
  for (int i = 0; i < 5; ++i) start[i + 1] = start[i] + parts[i];
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    // clique inside the part
    for (int u = start[i]; u < start[i + 1]; ++u)
      for (int v = u + 1; v < start[i + 1]; ++v) edges.emplace_back(u, v);
    // complete join to the cyclically next part
    int j = (i + 1) % 5;
    for (int u = start[i]; u < start[i + 1]; ++u)
      for (int v = start[j]; v < start[j + 1]; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::vector<int> turan_part_sizes(int m, int parts) {
  if (parts < 1 || m < parts) throw invalid_argument("turan-complement: need m >= parts >= 1");
  std::vector<int> sizes(parts, m / parts);
  for (int i = 0; i < m % parts; ++i) ++sizes[i];
  return sizes;
}

Graph build_disjoint_cliques(const std::vector<int>& sizes) {
  for (int s : sizes)
    if (s < 1) throw invalid_argument("disjoint-cliques: sizes must be positive");
  if (sizes.empty()) throw invalid_argument("disjoint-cliques: at least one clique");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (int s : sizes) {
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) edges.emplace_back(base + u, base + v);
    base += s;
  }
  return Graph::from_edges(n, edges);
}

std::vector<int> odd_optimal_parts(int k) {
  int a = odd_optimal_parameter(k);
  return {1, k - 1 - a, a, a, k - 1 - a};
}

struct GeneralParams {
  int k, ell;
};

GeneralParams general_params(int m, int r) {
  if (r < 3 || m < r) throw invalid_argument("general-example: need r >= 3 and m >= r");
  int k = (m + r - 2) / (r - 1);
  int ell = m - (k - 1) * (r - 1);
  if (ell < 1 || 2 * ell > r - 1)
    throw invalid_argument("general-example: requires 1 <= m - (k-1)(r-1) <= (r-1)/2");
  if (k < 4) throw invalid_argument("general-example: requires k = ceil(m/(r-1)) >= 4");
  return {k, ell};
}

}  // namespace

int odd_optimal_parameter(int k) {
  if (k < 4) throw invalid_argument("odd_optimal_parameter: k >= 4 required");
  auto margin = [&](int t) {
    Rational first(t, k - 2);
    Rational second = (Rational(k + 1, 2) - Rational(static_cast<int64_t>(t - 1) * (t - 1))) /
                      Rational(2 * k - 3);
    return std::min(first, second);
  };
  int best_t = 1;
  Rational best = margin(1);
  for (int t = 2; t <= k - 2; ++t) {
    Rational m = margin(t);
    if (m > best) {
      best = m;
      best_t = t;
    }
  }
  // sanity from the closed-form analysis of the maximizer
  if (2 * best_t > k - 1)
    throw std::logic_error("odd_optimal_parameter: maximizer exceeded (k-1)/2");
  if (2 * static_cast<int64_t>(best_t - 1) * (best_t - 1) >= k - 1)
    throw std::logic_error("odd_optimal_parameter: maximizer outside expected range");
  return best_t;
}

Rational odd_optimal_margin(int k) {
  int a = odd_optimal_parameter(k);
  Rational first(a, k - 2);
  Rational second =
      (Rational(k + 1, 2) - Rational(static_cast<int64_t>(a - 1) * (a - 1))) / Rational(2 * k - 3);
  return std::min(first, second);
}

Graph build(const ConstructionSpec& spec) {
  return std::visit(
      [](const auto& v) -> Graph {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstructionSpec::Cycle>) {
          if (v.n < 3) throw invalid_argument("cycle: n >= 3 required");
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < v.n; ++i) edges.emplace_back(i, (i + 1) % v.n);
          return Graph::from_edges(v.n, edges);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::Clique>) {
          if (v.k < 1) throw invalid_argument("clique: k >= 1 required");
          return build_disjoint_cliques({v.k});
        } else if constexpr (std::is_same_v<T, ConstructionSpec::DisjointCliques>) {
          return build_disjoint_cliques(v.sizes);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::CyclePower>) {
          if (v.n < 3 || v.d < 1 || 2 * v.d + 1 > v.n)
            throw invalid_argument("cycle-power: need n >= 3 and 1 <= d <= (n-1)/2");
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < v.n; ++i)
            for (int j = i + 1; j < v.n; ++j) {
              int dist = std::min(j - i, v.n - (j - i));
              if (dist <= v.d) edges.emplace_back(i, j);
            }
          return Graph::from_edges(v.n, edges);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::C5CliqueBlowup>) {
          return build_blowup(v.parts);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::ForbiddenBlowup>) {
          if (v.k < 3) throw invalid_argument("forbidden-blowup: k >= 3 required");
          return build_blowup({1, v.k - 2, 1, 1, v.k - 2});
        } else if constexpr (std::is_same_v<T, ConstructionSpec::OddOptimal>) {
          return build_blowup(odd_optimal_parts(v.k));
        } else if constexpr (std::is_same_v<T, ConstructionSpec::TuranComplement>) {
          return build_disjoint_cliques(turan_part_sizes(v.m, v.parts));
        } else {
          const auto& g = static_cast<const ConstructionSpec::GeneralExample&>(v);
          auto [k, ell] = general_params(g.m, g.r);
          Graph acc = build(ConstructionSpec{ConstructionSpec::OddOptimal{k}});
          for (int i = 1; i < ell; ++i)
            acc = acc.disjoint_union(build(ConstructionSpec{ConstructionSpec::OddOptimal{k}}));
          for (int i = 0; i < g.r - 1 - 2 * ell; ++i)
            acc = acc.disjoint_union(build_disjoint_cliques({k - 1}));
          return acc;
        }
      },
      spec.variant);
}

ExpectedStats expected_stats(const ConstructionSpec& spec) {
  return std::visit(
      [](const auto& v) -> ExpectedStats {
        using T = std::decay_t<decltype(v)>;
        ExpectedStats st;
        if constexpr (std::is_same_v<T, ConstructionSpec::Cycle>) {
          if (v.n < 3) throw invalid_argument("cycle: n >= 3 required");
          st.vertices = v.n;
          st.edges = v.n;
          st.alpha_upper = v.n / 2;
          st.two_density = Rational(v.n - 1, v.n - 2);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::Clique>) {
          st.vertices = v.k;
          st.edges = static_cast<int>(choose2(v.k));
          st.alpha_upper = 1;
          if (v.k >= 3) st.two_density = Rational(v.k + 1, 2);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::DisjointCliques>) {
          int maxs = 0;
          for (int s : v.sizes) {
            st.vertices += s;
            st.edges += static_cast<int>(choose2(s));
            maxs = std::max(maxs, s);
          }
          st.alpha_upper = static_cast<int>(v.sizes.size());
          if (maxs >= 3) st.two_density = Rational(maxs + 1, 2);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::CyclePower>) {
          st.vertices = v.n;
          st.edges = v.n * v.d;
          st.alpha_upper = v.n / (v.d + 1);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::C5CliqueBlowup>) {
          for (int i = 0; i < 5; ++i) {
            st.vertices += v.parts[i];
            st.edges += static_cast<int>(choose2(v.parts[i])) + v.parts[i] * v.parts[(i + 1) % 5];
          }
          st.alpha_upper = 2;  // the complement is a 5-cycle blow-up, triangle-free
        } else if constexpr (std::is_same_v<T, ConstructionSpec::ForbiddenBlowup>) {
          st.vertices = 2 * v.k - 1;
          st.edges = v.k * v.k - v.k - 1;
          st.alpha_upper = 2;
          if (v.k == 4) st.two_density = Rational(2);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::OddOptimal>) {
          int a = odd_optimal_parameter(v.k);
          st.vertices = 2 * v.k - 1;
          st.edges = v.k * (v.k - 1) + (a - 1) * (a - 1) - 1;
          st.alpha_upper = 2;
          st.two_density = Rational(v.k + 1, 2) - odd_optimal_margin(v.k);
        } else if constexpr (std::is_same_v<T, ConstructionSpec::TuranComplement>) {
          auto sizes = turan_part_sizes(v.m, v.parts);
          int maxs = 0;
          for (int s : sizes) {
            st.edges += static_cast<int>(choose2(s));
            maxs = std::max(maxs, s);
          }
          st.vertices = v.m;
          st.alpha_upper = v.parts;
          if (maxs >= 3) st.two_density = Rational(maxs + 1, 2);
        } else {
          const auto& g = static_cast<const ConstructionSpec::GeneralExample&>(v);
          auto [k, ell] = general_params(g.m, g.r);
          int a = odd_optimal_parameter(k);
          st.vertices = g.m;
          st.edges = ell * (k * (k - 1) + (a - 1) * (a - 1) - 1) +
                     (g.r - 1 - 2 * ell) * static_cast<int>(choose2(k - 1));
          st.alpha_upper = g.r - 1;
        }
        return st;
      },
      spec.variant);
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw invalid_argument("construction: empty list entry");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw invalid_argument("construction: empty parameter list");
  return out;
}

// "k=4" / "n=8,d=2" style arguments; bare integers allowed for single keys
std::vector<int> parse_named(const std::string& args, const std::vector<std::string>& keys) {
  std::vector<std::optional<int>> vals(keys.size());
  std::stringstream ss(args);
  std::string item;
  size_t positional = 0;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) {
      if (positional >= keys.size()) throw invalid_argument("construction: too many parameters");
      vals[positional++] = std::stoi(item);
      continue;
    }
    std::string key = item.substr(0, eq);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) throw invalid_argument("construction: unknown parameter '" + key + "'");
    vals[static_cast<size_t>(it - keys.begin())] = std::stoi(item.substr(eq + 1));
  }
  std::vector<int> out;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (!vals[i]) throw invalid_argument("construction: missing parameter '" + keys[i] + "'");
    out.push_back(*vals[i]);
  }
  return out;
}

}  // namespace

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw invalid_argument("construction: expected '<name>:<params>', got '" + text + "'");
  std::string name = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  try {
    if (name == "cycle") return {Cycle{parse_named(args, {"n"})[0]}};
    if (name == "clique") return {Clique{parse_named(args, {"k"})[0]}};
    if (name == "disjoint-cliques") return {DisjointCliques{parse_int_list(args)}};
    if (name == "cycle-power") {
      auto v = parse_named(args, {"n", "d"});
      return {CyclePower{v[0], v[1]}};
    }
    if (name == "c5-blowup") return {C5CliqueBlowup{parse_int_list(args)}};
    if (name == "forbidden-blowup") return {ForbiddenBlowup{parse_named(args, {"k"})[0]}};
    if (name == "odd-optimal") return {OddOptimal{parse_named(args, {"k"})[0]}};
    if (name == "turan-complement") {
      auto v = parse_named(args, {"m", "parts"});
      return {TuranComplement{v[0], v[1]}};
    }
    if (name == "general-example") {
      auto v = parse_named(args, {"m", "r"});
      return {GeneralExample{v[0], v[1]}};
    }
  } catch (const std::invalid_argument&) {
    throw invalid_argument("construction: malformed parameters in '" + text + "'");
  }
  throw invalid_argument("construction: unknown family '" + name + "'");
}

std::string ConstructionSpec::str() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, ConstructionSpec::Cycle>) {
          os << "cycle:n=" << v.n;
        } else if constexpr (std::is_same_v<T, ConstructionSpec::Clique>) {
          os << "clique:k=" << v.k;
        } else if constexpr (std::is_same_v<T, ConstructionSpec::DisjointCliques>) {
          os << "disjoint-cliques:";
          for (size_t i = 0; i < v.sizes.size(); ++i) os << (i ? "," : "") << v.sizes[i];
        } else if constexpr (std::is_same_v<T, ConstructionSpec::CyclePower>) {
          os << "cycle-power:n=" << v.n << ",d=" << v.d;
        } else if constexpr (std::is_same_v<T, ConstructionSpec::C5CliqueBlowup>) {
          os << "c5-blowup:";
          for (size_t i = 0; i < v.parts.size(); ++i) os << (i ? "," : "") << v.parts[i];
        } else if constexpr (std::is_same_v<T, ConstructionSpec::ForbiddenBlowup>) {
          os << "forbidden-blowup:k=" << v.k;
        } else if constexpr (std::is_same_v<T, ConstructionSpec::OddOptimal>) {
          os << "odd-optimal:k=" << v.k;
        } else if constexpr (std::is_same_v<T, ConstructionSpec::TuranComplement>) {
          os << "turan-complement:m=" << v.m << ",parts=" << v.parts;
        } else {
          const auto& g = static_cast<const ConstructionSpec::GeneralExample&>(v);
          os << "general-example:m=" << g.m << ",r=" << g.r;
        }
        return os.str();
      },
      variant);
}

}  // namespace turan2d
