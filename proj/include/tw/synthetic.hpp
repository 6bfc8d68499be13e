#pragma once

#include "tw/graph.hpp"

#include <cstdint>

namespace tw::synthetic {

/// G(n,p): every unordered pair is an edge independently with probability
/// p. Uses geometric skipping, O(expected edges). Deterministic given the
/// seed (mt19937_64).
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Preferential attachment: bootstrap clique on m+1 vertices, then each
/// new vertex attaches to m distinct existing vertices sampled
/// proportionally to degree (repeats rejected).
Graph preferential_attachment(int n, int m, std::uint64_t seed);

/// Watts-Strogatz: ring lattice with m neighbors on each side, then each
/// lattice edge has its far endpoint rewired to a uniform random vertex
/// with probability p_rewire (self-loops/duplicates resampled). Edge
/// count is exactly n*m.
Graph small_world(int n, int m, double p_rewire, std::uint64_t seed);

}  // namespace tw::synthetic
