#pragma once

#include "tw/graph.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace tw {

/// Tree (or forest, for disconnected graphs) of bags over graph vertices.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted, nonempty
    std::vector<std::pair<int, int>> tree_edges;
};

/// Vertex permutation driving the elimination procedure. A truncated
/// ordering covers only a prefix; the remaining vertices end up in one
/// residual bag of size residual_clique_size.
struct EliminationOrdering {
    std::vector<int> order;
    bool truncated = false;
    int residual_clique_size = 0;
};

/// Raised when a decomposition references unknown vertices or bag ids
/// (distinct from a mere validation failure).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValidationReport {
    bool vertices_covered = false;
    bool edges_covered = false;
    bool connected_subtrees = false;
    bool tree_shape = false;  // acyclic; connected unless the graph is disconnected
    std::string detail;

    bool ok() const { return vertices_covered && edges_covered && connected_subtrees && tree_shape; }
};

/// Max bag size minus one. Throws on an empty decomposition.
int width(const TreeDecomposition& td);

ValidationReport validate(const Graph& g, const TreeDecomposition& td);

/// Runs the elimination procedure with fill-in, one bag per eliminated
/// vertex ({v} plus current neighbors); a truncated ordering adds one
/// residual root bag. Each bag links to the bag of its earliest-eliminated
/// remaining member.
TreeDecomposition decomposition_from_ordering(const Graph& g, const EliminationOrdering& omega);

/// Chordal supergraph obtained by adding all fill-in edges of the
/// elimination procedure. Requires a complete ordering.
Graph triangulate(const Graph& g, const EliminationOrdering& omega);

/// Size of the largest bag produced during elimination; equals the
/// maximum clique size of triangulate(g, omega) for complete orderings.
int max_clique_of_triangulation(const Graph& g, const EliminationOrdering& omega);

/// PACE-style serialization: `s td <#bags> <width+1> <n>`, `b <bagid> <v...>`
/// lines (1-based ids), then bag-edge lines.
void write_pace(std::ostream& out, const TreeDecomposition& td, int n);
TreeDecomposition read_pace(std::istream& in);

namespace detail {
/// Links per-elimination bags (bags[i] belongs to order[i]) with the
/// earliest-remaining-member parent rule; a nonempty residue becomes one
/// extra root bag. Shared by decomposition_from_ordering and the greedy
/// upper-bound runner.
TreeDecomposition assemble_bags(std::vector<std::vector<int>> bags, const std::vector<int>& order,
                                const std::vector<int>& residue, int n);
}  // namespace detail

}  // namespace tw
