#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turan2d/graph.hpp"
#include "turan2d/rational.hpp"

namespace turan2d {

/// Parametric builders for the explicit graph families used throughout the
/// extremal searches, each with closed-form expected statistics.
///
/// The cycle blow-up kernel places a clique inside every part and a complete
/// join between cyclically adjacent parts.  Two fixed part patterns recur:
///   forbidden-blowup(k): parts (1, k-2, 1, 1, k-2) around the 5-cycle
///   odd-optimal(k):      parts (1, k-1-a, a, a, k-1-a), a the tuned size
struct ConstructionSpec {
  struct Cycle {
    int n;
  };
  struct Clique {
    int k;
  };
  struct DisjointCliques {
    std::vector<int> sizes;
  };
  struct CyclePower {
    int n, d;
  };
  struct C5CliqueBlowup {
    std::vector<int> parts;  // exactly 5 entries, cyclic order
  };
  struct ForbiddenBlowup {
    int k;  // k >= 3
  };
  struct OddOptimal {
    int k;  // k >= 4
  };
  struct TuranComplement {
    int m, parts;  // disjoint cliques with sizes as equal as possible
  };
  struct GeneralExample {
    int m, r;
  };

  using Variant = std::variant<Cycle, Clique, DisjointCliques, CyclePower, C5CliqueBlowup,
                               ForbiddenBlowup, OddOptimal, TuranComplement, GeneralExample>;
  Variant variant;

  /// Canonical textual form, e.g. "odd-optimal:k=5", "disjoint-cliques:5,5,5,5",
  /// "cycle-power:n=8,d=2".
  std::string str() const;
  static ConstructionSpec parse(const std::string& text);
};

Graph build(const ConstructionSpec& spec);

/// The tuned clique size a for odd-optimal(k): the smallest t in [1, k-2]
/// maximizing min(t/(k-2), ((k+1)/2 - (t-1)^2)/(2k-3)), exact arithmetic.
int odd_optimal_parameter(int k);

/// The density margin min(a/(k-2), ((k+1)/2-(a-1)^2)/(2k-3)) at the tuned a.
Rational odd_optimal_margin(int k);

/// Closed-form predictions to compare against computed invariants.
struct ExpectedStats {
  int vertices = 0;
  int edges = 0;
  std::optional<int> alpha_upper;      // claimed bound on the independence number
  std::optional<Rational> two_density;  // claimed exact m2, when a closed form exists
};

ExpectedStats expected_stats(const ConstructionSpec& spec);

}  // namespace turan2d
