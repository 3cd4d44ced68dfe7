#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan2d/graph.hpp"

namespace turan2d {

/// Exact maximum clique size, branch-and-bound with a greedy coloring bound.
int clique_number(const Graph& g);

/// True iff omega(g) >= k (early-exit search).
bool clique_number_at_least(const Graph& g, int k);

/// Exact independence number.  Sparse graphs are split into connected
/// components and solved per component; dense ones go through the clique
/// solver on the complement.
int independence_number(const Graph& g);

bool independence_number_at_least(const Graph& g, int k);

/// A maximum independent set (witness for independence_number).
std::vector<int> max_independent_set(const Graph& g);

/// Independence number with a search budget; nullopt once `max_nodes`
/// branch-and-bound nodes are exceeded.
std::optional<int> independence_number_budgeted(const Graph& g, uint64_t max_nodes);

/// Number of i-cliques; t_1 = n, t_2 = e(G), 0 for i > n.
uint64_t clique_count(const Graph& g, int i);

/// Smallest d such that every subgraph has a vertex of degree <= d
/// (iterative minimum-degree peeling).
int degeneracy(const Graph& g);

/// Minimum of alpha(g[S]) over all vertex subsets S of size m.
/// Requires 1 <= m <= n; the full sweep is guarded to n <= 20 (use
/// local_independence_at_least for larger graphs).
int local_independence_number(const Graph& g, int m);

/// True iff every m-subset S has alpha(g[S]) >= r.  Branch-and-bound over
/// subsets, pruning any partial subset whose alpha already reaches r.
bool local_independence_at_least(const Graph& g, int m, int r);

/// Injective map from h's vertices into g preserving every edge of h
/// (non-induced containment).  Returns the embedding or nullopt.
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& h);

bool contains_subgraph(const Graph& g, const Graph& h);

}  // namespace turan2d
