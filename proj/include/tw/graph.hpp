#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tw {

/// Parse failure while reading an external file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Simple undirected graph with dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted and free of self-loops and parallel
/// edges. An optional label table maps dense ids back to the original
/// identifiers of the input file.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long long num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[checked(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[checked(v)].size()); }
    bool has_edge(int u, int v) const;

    /// Inserts the edge; returns false for self-loops and duplicates.
    bool add_edge(int u, int v);

    bool has_labels() const { return !labels_.empty(); }
    std::int64_t label(int v) const;
    void set_labels(std::vector<std::int64_t> labels);
    const std::vector<std::int64_t>& labels() const { return labels_; }

    /// Debug audit: adjacency symmetry, sortedness, and m-consistency.
    void check_consistency() const;

private:
    int checked(int v) const {
        if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id out of range");
        return v;
    }

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
    std::vector<std::int64_t> labels_;
};

struct EdgeListOptions {
    std::string comment_prefix = "#";
};

/// Reads a SNAP-style edge list: one edge per line, two integer tokens
/// separated by whitespace. Directed duplicates, parallel edges and
/// self-loops collapse into a simple undirected graph; original ids are
/// kept as labels.
Graph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
Graph load_edge_list_file(const std::string& path, const EdgeListOptions& options = {});

struct RelationalFact {
    std::string relation;
    std::vector<std::string> constants;
};

struct GaifmanGraph {
    Graph graph;
    std::vector<std::string> constants;  // dense id -> constant name
};

/// Gaifman graph: one vertex per distinct constant, an edge between two
/// constants whenever they co-occur in some fact.
GaifmanGraph gaifman(const std::vector<RelationalFact>& facts);

/// CSV with header `relation,c1,c2,...`; ragged rows allowed.
std::vector<RelationalFact> load_relational_csv(std::istream& in);

/// Subgraph induced by `keep`, renumbered to 0..|keep|-1 in ascending id
/// order; labels record the original ids (or labels, when present).
Graph induced_subgraph(const Graph& g, std::span<const int> keep);

struct MinDegrees {
    int delta = 0;
    std::optional<int> delta2;  // absent when n < 2
};

MinDegrees min_degrees(const Graph& g);

/// Mutable elimination/contraction view over a Graph. Removal is
/// O(degree) per incident edge; adjacency stays sorted.
class Workspace {
public:
    explicit Workspace(const Graph& g);

    int original_vertices() const { return static_cast<int>(adj_.size()); }
    int active_count() const { return active_count_; }
    bool is_active(int v) const { return active_[checked(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[checked_active(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[checked_active(v)]; }
    bool has_edge(int u, int v) const;
    bool add_edge(int u, int v);
    long long num_edges() const { return m_; }

    void remove_vertex(int v);

    /// Connects the neighbors of v into a clique, then removes v.
    /// Returns the number of fill edges added.
    long long eliminate(int v);

    /// Merges v into u; requires (u,v) to be an edge.
    void contract_edge(int u, int v);

    std::vector<int> active_vertices() const;

    /// Snapshot of the active subgraph, renumbered, labels = workspace ids.
    Graph to_graph() const;

private:
    int checked(int v) const {
        if (v < 0 || v >= original_vertices()) throw std::out_of_range("vertex id out of range");
        return v;
    }
    int checked_active(int v) const {
        checked(v);
        if (!active_[v]) throw std::invalid_argument("vertex already removed");
        return v;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<char> active_;
    int active_count_ = 0;
    long long m_ = 0;
};

}  // namespace tw
