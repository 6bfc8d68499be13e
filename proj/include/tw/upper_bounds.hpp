#pragma once

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>

namespace tw {

enum class GreedyCriterion { Degree, FillIn, DegreeFillIn };

const char* to_string(GreedyCriterion c);

/// Tie-break policy for equal scores: smallest densified id, or a seeded
/// random priority per vertex (deterministic given the seed).
struct TieBreak {
    enum class Kind { ById, Random };
    Kind kind = Kind::ById;
    std::uint64_t seed = 0;

    static TieBreak by_id() { return {}; }
    static TieBreak random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

enum class Termination { Completed, EarlyStop, Timeout };

const char* to_string(Termination t);

struct UpperBoundResult {
    int width_ub = 0;
    EliminationOrdering ordering;
    TreeDecomposition decomposition;
    long long fill_edges_added = 0;
    std::chrono::milliseconds elapsed{0};
    Termination terminated_by = Termination::Completed;
};

struct UpperBoundOptions {
    std::optional<std::chrono::milliseconds> budget;
    std::ostream* checkpoint_csv = nullptr;  // rows: elapsed_ms,eliminated,width_so_far
    int checkpoint_interval = 1024;          // also the timeout-check granularity
    int dense_threshold = 32768;             // bitset adjacency below this vertex count
};

/// Greedy elimination upper bound: repeatedly eliminate the min-score
/// vertex, stopping early once the remaining vertex count is at most the
/// largest bag found so far (the residue goes into one root bag). The
/// result always carries a decomposition that validates against g with
/// width equal to width_ub.
UpperBoundResult greedy_upper_bound(const Graph& g, GreedyCriterion criterion,
                                    TieBreak tie = TieBreak::by_id(),
                                    const UpperBoundOptions& options = {});

/// Current score of an active vertex in a workspace.
int score(const Workspace& ws, int v, GreedyCriterion criterion);

}  // namespace tw
