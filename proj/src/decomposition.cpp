#include "tw/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tw {

namespace {

struct EliminationRun {
    std::vector<std::vector<int>> bags;  // bags[i] = {order[i]} + neighbors at elimination
    std::vector<int> residue;            // active vertices after the prefix
    long long fill_edges = 0;
    Graph triangulated;  // original edges + fill (same id space)
};

EliminationRun run_elimination(const Graph& g, const EliminationOrdering& omega, bool want_triangulated) {
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : omega.order) {
        if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("ordering references unknown vertex");
        if (seen[v]) throw std::invalid_argument("ordering repeats vertex " + std::to_string(v));
        seen[v] = 1;
    }
    if (!omega.truncated && static_cast<int>(omega.order.size()) != g.num_vertices())
        throw std::invalid_argument("ordering does not cover all vertices");

    EliminationRun run;
    Workspace ws(g);
    Graph tri;
    if (want_triangulated) {
        tri = Graph(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int u : g.neighbors(v))
                if (u > v) tri.add_edge(v, u);
        if (g.has_labels()) tri.set_labels(g.labels());
    }

    for (int v : omega.order) {
        const auto& nbrs = ws.neighbors(v);
        std::vector<int> bag;
        bag.reserve(nbrs.size() + 1);
        bag.push_back(v);
        bag.insert(bag.end(), nbrs.begin(), nbrs.end());
        std::sort(bag.begin(), bag.end());
        run.bags.push_back(std::move(bag));
        if (want_triangulated) {
            auto copy = nbrs;
            for (size_t i = 0; i < copy.size(); ++i)
                for (size_t j = i + 1; j < copy.size(); ++j) tri.add_edge(copy[i], copy[j]);
        }
        run.fill_edges += ws.eliminate(v);
    }
    run.residue = ws.active_vertices();
    if (want_triangulated) run.triangulated = std::move(tri);
    return run;
}

// Union-find used by the validator.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int width(const TreeDecomposition& td) {
    if (td.bags.empty()) throw std::invalid_argument("width of empty decomposition");
    size_t mx = 0;
    for (const auto& b : td.bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    for (const auto& bag : td.bags) {
        if (bag.empty()) throw StructuralError("empty bag");
        for (int v : bag)
            if (v < 0 || v >= g.num_vertices())
                throw StructuralError("bag references unknown vertex " + std::to_string(v));
    }
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            throw StructuralError("tree edge references unknown bag");

    ValidationReport rep;
    std::ostringstream detail;

    // (1) vertex coverage
    std::vector<char> covered(g.num_vertices(), 0);
    for (const auto& bag : td.bags)
        for (int v : bag) covered[v] = 1;
    rep.vertices_covered =
        std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    if (!rep.vertices_covered) detail << "uncovered vertex exists; ";

    // bag membership lists per vertex
    std::vector<std::vector<int>> bags_of(g.num_vertices());
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i]) bags_of[v].push_back(i);

    // (2) edge coverage
    rep.edges_covered = true;
    for (int v = 0; v < g.num_vertices() && rep.edges_covered; ++v)
        for (int u : g.neighbors(v)) {
            if (u < v) continue;
            bool found = false;
            for (int i : bags_of[v])
                if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), u)) {
                    found = true;
                    break;
                }
            if (!found) {
                rep.edges_covered = false;
                detail << "edge " << v << "-" << u << " not covered; ";
                break;
            }
        }

    // tree shape: acyclic, and connected when the graph is connected
    Dsu bag_dsu(std::max(nb, 1));
    bool acyclic = true;
    for (auto [a, b] : td.tree_edges)
        if (!bag_dsu.unite(a, b)) acyclic = false;
    int tree_components = 0;
    for (int i = 0; i < nb; ++i)
        if (bag_dsu.find(i) == i) ++tree_components;
    Dsu graph_dsu(std::max(g.num_vertices(), 1));
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v)) graph_dsu.unite(u, v);
    int graph_components = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (graph_dsu.find(v) == v) ++graph_components;
    rep.tree_shape = acyclic && (nb == 0 || tree_components <= std::max(graph_components, 1));
    if (!rep.tree_shape) detail << (acyclic ? "decomposition forest too fragmented; " : "cycle among bags; ");

    // (3) connected subtrees: per vertex, its bags must form one component
    std::vector<std::vector<int>> bag_adj(nb);
    for (auto [a, b] : td.tree_edges) {
        bag_adj[a].push_back(b);
        bag_adj[b].push_back(a);
    }
    rep.connected_subtrees = true;
    std::vector<int> mark(nb, -1);
    for (int v = 0; v < g.num_vertices() && rep.connected_subtrees; ++v) {
        const auto& bs = bags_of[v];
        if (bs.size() <= 1) continue;
        for (int i : bs) mark[i] = v;
        std::vector<int> stack{bs[0]};
        mark[bs[0]] = -2 - v;  // visited
        size_t reached = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : bag_adj[i])
                if (mark[j] == v) {
                    mark[j] = -2 - v;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached != bs.size()) {
            rep.connected_subtrees = false;
            detail << "bags of vertex " << v << " not connected; ";
        }
    }

    rep.detail = detail.str();
    return rep;
}

namespace detail {

TreeDecomposition assemble_bags(std::vector<std::vector<int>> bags, const std::vector<int>& order,
                                const std::vector<int>& residue, int n) {
    TreeDecomposition td;
    size_t nbags = bags.size();
    td.bags = std::move(bags);
    std::vector<int> elim_pos(n, -1);
    for (size_t i = 0; i < order.size(); ++i) elim_pos[order[i]] = static_cast<int>(i);

    int residual_bag = -1;
    if (!residue.empty()) {
        residual_bag = static_cast<int>(td.bags.size());
        td.bags.emplace_back(residue.begin(), residue.end());
    }

    for (size_t i = 0; i < nbags; ++i) {
        int parent = -1;  // bag index of the earliest-eliminated remaining member
        int best_pos = n + 1;
        for (int u : td.bags[i]) {
            if (u == order[i]) continue;
            int p = elim_pos[u];
            if (p >= 0 && p < best_pos) {
                best_pos = p;
                parent = p;
            }
        }
        if (parent >= 0)
            td.tree_edges.emplace_back(static_cast<int>(i), parent);
        else if (td.bags[i].size() > 1 && residual_bag >= 0)
            td.tree_edges.emplace_back(static_cast<int>(i), residual_bag);
        // a singleton bag with no residue is the root of its component
    }
    return td;
}

}  // namespace detail

TreeDecomposition decomposition_from_ordering(const Graph& g, const EliminationOrdering& omega) {
    auto run = run_elimination(g, omega, /*want_triangulated=*/false);
    return detail::assemble_bags(std::move(run.bags), omega.order, run.residue, g.num_vertices());
}

Graph triangulate(const Graph& g, const EliminationOrdering& omega) {
    if (omega.truncated) throw std::invalid_argument("triangulate requires a complete ordering");
    return run_elimination(g, omega, /*want_triangulated=*/true).triangulated;
}

int max_clique_of_triangulation(const Graph& g, const EliminationOrdering& omega) {
    auto run = run_elimination(g, omega, /*want_triangulated=*/false);
    size_t mx = run.residue.empty() ? 0 : run.residue.size();
    for (const auto& b : run.bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx);
}

void write_pace(std::ostream& out, const TreeDecomposition& td, int n) {
    int w = td.bags.empty() ? 0 : width(td) + 1;
    out << "s td " << td.bags.size() << " " << w << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

TreeDecomposition read_pace(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    long lineno = 0;
    long declared_bags = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 's') {
            std::string s, tdtok;
            long w, n;
            if (!(ss >> s >> tdtok >> declared_bags >> w >> n) || tdtok != "td")
                throw ParseError("malformed s-line", lineno);
            td.bags.resize(declared_bags);
        } else if (line[0] == 'b') {
            char b;
            long id;
            if (!(ss >> b >> id) || id < 1 || id > static_cast<long>(td.bags.size()))
                throw ParseError("malformed b-line", lineno);
            int v;
            while (ss >> v) td.bags[id - 1].push_back(v - 1);
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            long a, b;
            if (!(std::istringstream(line) >> a >> b))
                throw ParseError("malformed bag-edge line", lineno);
            td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (declared_bags < 0) throw ParseError("missing s-line", lineno);
    return td;
}

}  // namespace tw
