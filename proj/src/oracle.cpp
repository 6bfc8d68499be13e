#include "tw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace tw::oracle {

namespace {

void check_size(const Graph& g, int max_n, const char* what) {
    if (g.num_vertices() > max_n)
        throw std::invalid_argument(std::string(what) + ": graph exceeds oracle limit of " +
                                    std::to_string(max_n) + " vertices");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    return adj;
}

// Vertices outside S reachable from v through vertices of S \ {v}.
int up_neighbors(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
    std::uint32_t inside = adj[v] & s & ~(1u << v);
    std::uint32_t outside = adj[v] & ~s;
    std::uint32_t seen = inside | (1u << v);
    while (inside) {
        int u = std::countr_zero(inside);
        inside &= inside - 1;
        outside |= adj[u] & ~s;
        std::uint32_t fresh = adj[u] & s & ~seen;
        seen |= fresh;
        inside |= fresh;
    }
    return std::popcount(outside & ~(1u << v));
}

}  // namespace

int exact_treewidth(const Graph& g, int max_n) {
    check_size(g, max_n, "exact_treewidth");
    int n = g.num_vertices();
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    std::vector<signed char> f(1u << n, 0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int best = n;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cost = std::max(up_neighbors(adj, s, v), static_cast<int>(f[s & ~(1u << v)]));
            best = std::min(best, cost);
        }
        f[s] = static_cast<signed char>(best);
    }
    return f[(1u << n) - 1];
}

int brute_degeneracy(const Graph& g, int max_n) {
    check_size(g, max_n, "brute_degeneracy");
    int n = g.num_vertices();
    auto adj = adjacency_masks(g);
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int lo = n;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            lo = std::min(lo, std::popcount(adj[v] & s));
        }
        best = std::max(best, lo);
    }
    return best;
}

int brute_delta2_degeneracy(const Graph& g, int max_n) {
    check_size(g, max_n, "brute_delta2_degeneracy");
    int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("brute_delta2_degeneracy: need at least 2 vertices");
    auto adj = adjacency_masks(g);
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (std::popcount(s) < 2) continue;
        int lo = n, lo2 = n;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj[v] & s);
            if (d < lo) {
                lo2 = lo;
                lo = d;
            } else if (d < lo2) {
                lo2 = d;
            }
        }
        best = std::max(best, lo2);
    }
    return best;
}

bool is_chordal(const Graph& g) {
    int n = g.num_vertices();
    // Maximum cardinality search, then perfect elimination ordering check.
    std::vector<int> weight(n, 0), order(n), pos(n, -1);
    std::vector<char> numbered(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = 1;
        order[i] = best;
        pos[best] = i;
        for (int u : g.neighbors(best))
            if (!numbered[u]) ++weight[u];
    }
    // order is a candidate PEO; verify later neighbors of each vertex form a clique
    // via the standard parent check.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i && (parent < 0 || pos[u] < pos[parent])) parent = u;
        if (parent < 0) continue;
        for (int u : g.neighbors(v))
            if (pos[u] > i && u != parent && !g.has_edge(parent, u)) return false;
    }
    return true;
}

}  // namespace tw::oracle
