#pragma once

#include "tw/graph.hpp"
#include "tw/upper_bounds.hpp"  // Termination

#include <chrono>
#include <optional>
#include <string>

namespace tw {

struct LowerBoundResult {
    int value = 0;
    std::string algorithm;
    std::chrono::milliseconds elapsed{0};
    Termination terminated_by = Termination::Completed;
};

struct LowerBoundOptions {
    std::optional<std::chrono::milliseconds> budget;
};

/// Maximum minimum degree: repeatedly remove a min-degree vertex (ties by
/// id) and keep the largest minimum degree seen. Computes the degeneracy
/// exactly.
LowerBoundResult mmd(const Graph& g, const LowerBoundOptions& options = {});

/// Exact delta2-degeneracy via the O(|V|*|E|) loop: for every excluded
/// vertex v, repeatedly remove the min-degree vertex other than v and
/// track the maximum removal degree. Requires n >= 2. Returns nullopt
/// when |V|*|E| exceeds work_cap.
std::optional<LowerBoundResult> delta2d(const Graph& g,
                                        std::optional<long long> work_cap = std::nullopt,
                                        const LowerBoundOptions& options = {});

/// Contraction heuristic for the contraction degeneracy: at each step
/// contract the min-degree vertex into its least-c neighbor (fewest
/// common neighbors, ties by id).
LowerBoundResult mmd_plus(const Graph& g, const LowerBoundOptions& options = {});

/// Fixpoint of: while non-adjacent v,w share at least k+1 common
/// neighbors, add (v,w). Scan order (min id, max id).
Graph improve_graph(const Graph& g, int k);

enum class LbnBase { MMD, Delta2D, MMDPlus };

LbnBase lbn_base_from_string(const std::string& s);
const char* to_string(LbnBase b);

/// Iterated improvement: improve with the current bound, re-estimate,
/// repeat while the bound grows.
LowerBoundResult lbn(const Graph& g, LbnBase base, const LowerBoundOptions& options = {});

/// Like lbn, but each round also performs one least-c contraction pass
/// before re-estimating.
LowerBoundResult lbn_plus(const Graph& g, LbnBase base, const LowerBoundOptions& options = {});

}  // namespace tw
