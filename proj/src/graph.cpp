#include "tw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tw {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// Returns true if x was absent and has been inserted.
bool sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) return false;
    v.insert(it, x);
    return true;
}

bool sorted_erase(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return false;
    v.erase(it);
    return true;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
    checked(u);
    checked(v);
    return sorted_contains(adj_[u], v);
}

bool Graph::add_edge(int u, int v) {
    checked(u);
    checked(v);
    if (u == v) return false;
    if (!sorted_insert(adj_[u], v)) return false;
    sorted_insert(adj_[v], u);
    ++m_;
    return true;
}

std::int64_t Graph::label(int v) const {
    checked(v);
    return labels_.empty() ? v : labels_[v];
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
    if (static_cast<int>(labels.size()) != num_vertices())
        throw std::invalid_argument("label table size mismatch");
    labels_ = std::move(labels);
}

void Graph::check_consistency() const {
    long long deg_sum = 0;
    for (int v = 0; v < num_vertices(); ++v) {
        const auto& nb = adj_[v];
        if (!std::is_sorted(nb.begin(), nb.end()))
            throw std::logic_error("adjacency not sorted");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::logic_error("parallel edge");
        for (int u : nb) {
            if (u == v) throw std::logic_error("self-loop");
            if (!sorted_contains(adj_[checked(u)], v))
                throw std::logic_error("asymmetric adjacency");
        }
        deg_sum += static_cast<long long>(nb.size());
    }
    if (deg_sum != 2 * m_) throw std::logic_error("edge count inconsistent with degrees");
}

Graph load_edge_list(std::istream& in, const EdgeListOptions& options) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::unordered_map<std::int64_t, int> remap;
    std::vector<std::int64_t> labels;
    auto densify = [&](std::int64_t raw) {
        auto [it, fresh] = remap.try_emplace(raw, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(raw);
        return it->second;
    };

    std::string line;
    long lineno = 0;
    std::vector<std::pair<int, int>> dense;
    while (std::getline(in, line)) {
        ++lineno;
        if (!options.comment_prefix.empty() &&
            line.compare(0, options.comment_prefix.size(), options.comment_prefix) == 0)
            continue;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ss(line);
        std::int64_t a, b;
        if (!(ss >> a) || !(ss >> b)) throw ParseError("expected two integer tokens", lineno);
        std::string extra;
        if (ss >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
        int u = densify(a);  // sequenced: ids follow first appearance
        int v = densify(b);
        dense.emplace_back(u, v);
    }

    Graph g(static_cast<int>(labels.size()));
    for (auto [u, v] : dense) g.add_edge(u, v);
    g.set_labels(std::move(labels));
    return g;
}

Graph load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in, options);
}

GaifmanGraph gaifman(const std::vector<RelationalFact>& facts) {
    std::unordered_map<std::string, int> remap;
    std::vector<std::string> constants;
    auto densify = [&](const std::string& c) {
        auto [it, fresh] = remap.try_emplace(c, static_cast<int>(constants.size()));
        if (fresh) constants.push_back(c);
        return it->second;
    };

    std::vector<std::vector<int>> fact_ids;
    fact_ids.reserve(facts.size());
    for (const auto& f : facts) {
        if (f.constants.empty())
            throw std::invalid_argument("fact with no constants: " + f.relation);
        std::vector<int> ids;
        ids.reserve(f.constants.size());
        for (const auto& c : f.constants) ids.push_back(densify(c));
        fact_ids.push_back(std::move(ids));
    }

    Graph g(static_cast<int>(constants.size()));
    for (const auto& ids : fact_ids)
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) g.add_edge(ids[i], ids[j]);
    return {std::move(g), std::move(constants)};
}

std::vector<RelationalFact> load_relational_csv(std::istream& in) {
    std::vector<RelationalFact> facts;
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!header_seen) {
            if (fields.empty() || fields[0] != "relation")
                throw ParseError("expected header starting with 'relation'", lineno);
            header_seen = true;
            continue;
        }
        if (fields.size() < 2) throw ParseError("fact needs at least one constant", lineno);
        RelationalFact f;
        f.relation = fields[0];
        f.constants.assign(fields.begin() + 1, fields.end());
        facts.push_back(std::move(f));
    }
    return facts;
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("unknown vertex in induced_subgraph");

    std::vector<int> newid(g.num_vertices(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) newid[sorted[i]] = static_cast<int>(i);

    Graph out(static_cast<int>(sorted.size()));
    std::vector<std::int64_t> labels;
    labels.reserve(sorted.size());
    for (int v : sorted) {
        labels.push_back(g.label(v));
        for (int u : g.neighbors(v))
            if (newid[u] >= 0 && u > v) out.add_edge(newid[v], newid[u]);
    }
    out.set_labels(std::move(labels));
    return out;
}

MinDegrees min_degrees(const Graph& g) {
    MinDegrees md;
    int n = g.num_vertices();
    if (n == 0) return md;
    int lo = std::numeric_limits<int>::max(), lo2 = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d < lo) {
            lo2 = lo;
            lo = d;
        } else if (d < lo2) {
            lo2 = d;
        }
    }
    md.delta = lo;
    if (n >= 2) md.delta2 = lo2;
    return md;
}

Workspace::Workspace(const Graph& g)
    : adj_(g.num_vertices()),
      active_(g.num_vertices(), 1),
      active_count_(g.num_vertices()),
      m_(g.num_edges()) {
    for (int v = 0; v < g.num_vertices(); ++v) adj_[v] = g.neighbors(v);
}

bool Workspace::has_edge(int u, int v) const {
    checked_active(u);
    checked_active(v);
    return sorted_contains(adj_[u], v);
}

bool Workspace::add_edge(int u, int v) {
    checked_active(u);
    checked_active(v);
    if (u == v) return false;
    if (!sorted_insert(adj_[u], v)) return false;
    sorted_insert(adj_[v], u);
    ++m_;
    return true;
}

void Workspace::remove_vertex(int v) {
    checked_active(v);
    for (int u : adj_[v]) {
        sorted_erase(adj_[u], v);
        --m_;
    }
    adj_[v].clear();
    adj_[v].shrink_to_fit();
    active_[v] = 0;
    --active_count_;
}

long long Workspace::eliminate(int v) {
    checked_active(v);
    long long fill = 0;
    const auto nbrs = adj_[v];  // copy: adj_[v] is about to be cleared
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (add_edge(nbrs[i], nbrs[j])) ++fill;
    remove_vertex(v);
    return fill;
}

void Workspace::contract_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("contract_edge: not an edge");
    const auto nbrs = adj_[v];
    remove_vertex(v);
    for (int x : nbrs)
        if (x != u) add_edge(u, x);
}

std::vector<int> Workspace::active_vertices() const {
    std::vector<int> out;
    out.reserve(active_count_);
    for (int v = 0; v < original_vertices(); ++v)
        if (active_[v]) out.push_back(v);
    return out;
}

Graph Workspace::to_graph() const {
    auto verts = active_vertices();
    std::vector<int> newid(original_vertices(), -1);
    for (size_t i = 0; i < verts.size(); ++i) newid[verts[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(verts.size()));
    std::vector<std::int64_t> labels(verts.begin(), verts.end());
    for (int v : verts)
        for (int u : adj_[v])
            if (u > v) g.add_edge(newid[v], newid[u]);
    g.set_labels(std::move(labels));
    return g;
}

}  // namespace tw
