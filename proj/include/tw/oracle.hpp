#pragma once

#include "tw/graph.hpp"

namespace tw::oracle {

inline constexpr int kDefaultMaxN = 14;

/// Exact treewidth by dynamic programming over vertex subsets,
/// f(S) = min over v in S of max(|up-neighbors of v through S|, f(S\{v})).
/// Refuses graphs larger than max_n.
int exact_treewidth(const Graph& g, int max_n = kDefaultMaxN);

/// Exact degeneracy (max over induced subgraphs of the minimum degree)
/// by subset enumeration.
int brute_degeneracy(const Graph& g, int max_n = kDefaultMaxN);

/// Exact delta2-degeneracy (max over induced subgraphs with >= 2 vertices
/// of the second-smallest degree) by subset enumeration.
int brute_delta2_degeneracy(const Graph& g, int max_n = kDefaultMaxN);

/// Chordality via a maximum-cardinality-search perfect elimination
/// ordering check; works at any size.
bool is_chordal(const Graph& g);

}  // namespace tw::oracle
