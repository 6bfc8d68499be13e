#include "tw/partial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <tuple>

namespace tw {

namespace {

std::vector<std::uint32_t> tie_priorities(int n, TieBreak tie) {
    std::vector<std::uint32_t> pri(n);
    std::iota(pri.begin(), pri.end(), 0u);
    if (tie.kind == TieBreak::Kind::Random) {
        std::mt19937_64 rng(tie.seed);
        std::shuffle(pri.begin(), pri.end(), rng);
    }
    return pri;
}

long long ws_score(const Workspace& ws, int v, GreedyCriterion criterion) {
    if (criterion == GreedyCriterion::Degree) return ws.degree(v);
    const auto& nb = ws.neighbors(v);
    long long missing = 0;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!ws.has_edge(nb[i], nb[j])) ++missing;
    return criterion == GreedyCriterion::FillIn ? missing : missing + ws.degree(v);
}

}  // namespace

PartialDecomposition partial_decompose(const Graph& g, int w, GreedyCriterion criterion,
                                       TieBreak tie) {
    if (w < 0) throw std::invalid_argument("partial_decompose: w must be >= 0");
    const int n = g.num_vertices();
    Workspace ws(g);
    auto pri = tie_priorities(n, tie);

    using Entry = std::tuple<long long, std::uint32_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<long long> cur(n, 0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= w) {
            cur[v] = ws_score(ws, v, criterion);
            heap.emplace(cur[v], pri[v], v);
        }

    PartialDecomposition pd;
    pd.w = w;
    std::vector<std::vector<int>> bags;
    const bool need_fill = criterion != GreedyCriterion::Degree;
    std::vector<int> affected;
    std::vector<char> in_affected(n, 0);

    while (!heap.empty()) {
        auto [s, p, v] = heap.top();
        heap.pop();
        if (!ws.is_active(v) || ws.degree(v) > w || s != cur[v]) continue;

        const auto nbrs = ws.neighbors(v);
        std::vector<int> bag;
        bag.reserve(nbrs.size() + 1);
        bag.push_back(v);
        bag.insert(bag.end(), nbrs.begin(), nbrs.end());
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
        pd.eliminated.push_back(v);

        affected.clear();
        for (int u : nbrs)
            if (!in_affected[u]) {
                in_affected[u] = 1;
                affected.push_back(u);
            }
        if (need_fill)
            for (int u : nbrs)
                for (int x : ws.neighbors(u))
                    if (x != v && !in_affected[x]) {
                        in_affected[x] = 1;
                        affected.push_back(x);
                    }

        pd.fill_edges_added += ws.eliminate(v);

        for (int u : affected) {
            in_affected[u] = 0;
            if (!ws.is_active(u) || ws.degree(u) > w) continue;
            long long sc = ws_score(ws, u, criterion);
            cur[u] = sc;
            heap.emplace(sc, pri[u], u);
        }
    }

    // fringe links: earliest-eliminated remaining member; bags whose other
    // members all survive are fragment roots, interfacing with the core
    std::vector<int> elim_pos(n, -1);
    for (size_t i = 0; i < pd.eliminated.size(); ++i) elim_pos[pd.eliminated[i]] = static_cast<int>(i);
    pd.fringe.bags = std::move(bags);
    for (size_t i = 0; i < pd.fringe.bags.size(); ++i) {
        int parent = -1, best_pos = n + 1;
        std::vector<int> core_members;
        for (int u : pd.fringe.bags[i]) {
            if (u == pd.eliminated[i]) continue;
            int p = elim_pos[u];
            if (p < 0)
                core_members.push_back(u);
            else if (p < best_pos) {
                best_pos = p;
                parent = p;
            }
        }
        if (parent >= 0)
            pd.fringe.tree_edges.emplace_back(static_cast<int>(i), parent);
        else
            pd.interfaces.push_back(std::move(core_members));
    }

    pd.core = ws.to_graph();
    for (int a = 0; a < pd.core.num_vertices(); ++a)
        for (int b : pd.core.neighbors(a))
            if (b > a && g.has_edge(static_cast<int>(pd.core.label(a)),
                                    static_cast<int>(pd.core.label(b))))
                ++pd.core_edges_original;
    return pd;
}

TreeDecomposition assemble_decomposition(const PartialDecomposition& pd, const Graph& g) {
    TreeDecomposition td = pd.fringe;
    if (pd.core.num_vertices() > 0) {
        std::vector<int> core_bag(pd.core.num_vertices());
        for (int i = 0; i < pd.core.num_vertices(); ++i) core_bag[i] = static_cast<int>(pd.core.label(i));
        std::sort(core_bag.begin(), core_bag.end());
        int root = static_cast<int>(td.bags.size());
        td.bags.push_back(std::move(core_bag));
        // attach fragment roots (bags without a fringe parent and with a
        // nonempty, or even empty, interface) to the core root
        std::vector<char> has_parent(pd.fringe.bags.size(), 0);
        for (auto [child, parent] : pd.fringe.tree_edges) has_parent[child] = 1;
        for (size_t i = 0; i < pd.fringe.bags.size(); ++i)
            if (!has_parent[i] && pd.fringe.bags[i].size() > 1)
                td.tree_edges.emplace_back(static_cast<int>(i), root);
    }
    (void)g;
    return td;
}

std::vector<CoreSweepRow> core_size_sweep(const Graph& g, std::span<const int> w_values,
                                          GreedyCriterion criterion, TieBreak tie) {
    if (!std::is_sorted(w_values.begin(), w_values.end()))
        throw std::invalid_argument("core_size_sweep: w values must be ascending");
    std::vector<CoreSweepRow> rows;
    const double m = static_cast<double>(g.num_edges());
    for (int w : w_values) {
        auto pd = partial_decompose(g, w, criterion, tie);
        CoreSweepRow row;
        row.w = w;
        row.core_nodes = pd.core.num_vertices();
        row.core_edges_with_fill = pd.core.num_edges();
        row.core_edges_original = pd.core_edges_original;
        row.relative_with_fill = m > 0 ? row.core_edges_with_fill / m : 0.0;
        row.relative_original = m > 0 ? row.core_edges_original / m : 0.0;
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const CoreSweepRow> rows) {
    out << "w,core_nodes,core_edges_with_fill,core_edges_original,relative_with_fill,"
           "relative_original\n";
    for (const auto& r : rows)
        out << r.w << "," << r.core_nodes << "," << r.core_edges_with_fill << ","
            << r.core_edges_original << "," << r.relative_with_fill << "," << r.relative_original
            << "\n";
}

}  // namespace tw
