#pragma once

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/upper_bounds.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace tw {

/// Width-w fringe peeled off a graph by greedy elimination, leaving a
/// residual core. Fringe fragments attach to the core through cliques of
/// at most w+1 core vertices.
struct PartialDecomposition {
    TreeDecomposition fringe;           // bags + forest links among fringe bags
    std::vector<int> eliminated;        // peel order (original vertex ids)
    Graph core;                         // active residue incl. fill edges; labels = original ids
    long long core_edges_original = 0;  // core edges already present in the input
    std::vector<std::vector<int>> interfaces;  // per fragment-root bag: its core members
    int w = 0;
    long long fill_edges_added = 0;
};

/// Greedy elimination restricted to vertices of current degree <= w;
/// stops when every remaining vertex has degree > w.
PartialDecomposition partial_decompose(const Graph& g, int w, GreedyCriterion criterion,
                                       TieBreak tie = TieBreak::by_id());

/// Fringe plus the whole core as one root bag; validates against g.
TreeDecomposition assemble_decomposition(const PartialDecomposition& pd, const Graph& g);

struct CoreSweepRow {
    int w = 0;
    int core_nodes = 0;
    long long core_edges_with_fill = 0;
    long long core_edges_original = 0;
    double relative_with_fill = 0.0;  // vs original m; can exceed 1 through fill-in
    double relative_original = 0.0;
};

/// One partial decomposition per requested width (ascending).
std::vector<CoreSweepRow> core_size_sweep(const Graph& g, std::span<const int> w_values,
                                          GreedyCriterion criterion,
                                          TieBreak tie = TieBreak::by_id());

/// CSV columns: w,core_nodes,core_edges_with_fill,core_edges_original,
/// relative_with_fill,relative_original
void write_sweep_csv(std::ostream& out, std::span<const CoreSweepRow> rows);

/// Worst-case fill-in per elimination at peel width w.
constexpr long long fill_in_edge_budget(int w) {
    return static_cast<long long>(w) * (w - 1) / 2;
}

}  // namespace tw
