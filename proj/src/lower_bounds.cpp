#include "tw/lower_bounds.hpp"

#include <algorithm>
#include <set>

namespace tw {

namespace {

using Clock = std::chrono::steady_clock;

bool out_of_budget(const LowerBoundOptions& options, Clock::time_point t0) {
    return options.budget && Clock::now() - t0 >= *options.budget;
}

std::chrono::milliseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

long long common_neighbors(const Workspace& ws, int a, int b) {
    const auto& na = ws.neighbors(a);
    const auto& nb = ws.neighbors(b);
    long long cnt = 0;
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++cnt;
            ++i;
            ++j;
        }
    }
    return cnt;
}

long long common_neighbors(const Graph& g, int a, int b) {
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    long long cnt = 0;
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++cnt;
            ++i;
            ++j;
        }
    }
    return cnt;
}

}  // namespace

LowerBoundResult mmd(const Graph& g, const LowerBoundOptions& options) {
    auto t0 = Clock::now();
    LowerBoundResult res;
    res.algorithm = "mmd";
    Workspace ws(g);
    std::set<std::pair<int, int>> queue;  // (degree, id)
    for (int v = 0; v < g.num_vertices(); ++v) queue.emplace(g.degree(v), v);

    int steps = 0;
    while (!queue.empty()) {
        if (++steps >= 1024) {
            steps = 0;
            if (out_of_budget(options, t0)) {
                res.terminated_by = Termination::Timeout;
                break;
            }
        }
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        res.value = std::max(res.value, d);
        for (int u : ws.neighbors(v)) {
            queue.erase({ws.degree(u), u});
            queue.emplace(ws.degree(u) - 1, u);
        }
        ws.remove_vertex(v);
    }
    res.elapsed = since(t0);
    return res;
}

std::optional<LowerBoundResult> delta2d(const Graph& g, std::optional<long long> work_cap,
                                        const LowerBoundOptions& options) {
    if (g.num_vertices() < 2) throw std::invalid_argument("delta2d requires at least 2 vertices");
    if (work_cap &&
        static_cast<long long>(g.num_vertices()) * std::max(g.num_edges(), 1ll) > *work_cap)
        return std::nullopt;

    auto t0 = Clock::now();
    LowerBoundResult res;
    res.algorithm = "delta2d";
    for (int excluded = 0; excluded < g.num_vertices(); ++excluded) {
        if (out_of_budget(options, t0)) {
            res.terminated_by = Termination::Timeout;
            break;
        }
        Workspace ws(g);
        std::set<std::pair<int, int>> queue;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (v != excluded) queue.emplace(g.degree(v), v);
        while (!queue.empty()) {
            auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            res.value = std::max(res.value, d);
            for (int u : ws.neighbors(v))
                if (u != excluded) {
                    queue.erase({ws.degree(u), u});
                    queue.emplace(ws.degree(u) - 1, u);
                }
            ws.remove_vertex(v);
        }
    }
    res.elapsed = since(t0);
    return res;
}

LowerBoundResult mmd_plus(const Graph& g, const LowerBoundOptions& options) {
    auto t0 = Clock::now();
    LowerBoundResult res;
    res.algorithm = "mmd+";
    Workspace ws(g);
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < g.num_vertices(); ++v) queue.emplace(g.degree(v), v);

    int steps = 0;
    while (!queue.empty()) {
        if (++steps >= 256) {
            steps = 0;
            if (out_of_budget(options, t0)) {
                res.terminated_by = Termination::Timeout;
                break;
            }
        }
        auto [d, v] = *queue.begin();
        res.value = std::max(res.value, d);
        if (d == 0) {
            queue.erase(queue.begin());
            ws.remove_vertex(v);
            continue;
        }
        // least-c neighbor: fewest common neighbors, ties by id
        int target = -1;
        long long best_common = -1;
        for (int u : ws.neighbors(v)) {
            long long c = common_neighbors(ws, v, u);
            if (target < 0 || c < best_common) {
                target = u;
                best_common = c;
            }
        }
        auto old_nbrs = ws.neighbors(v);
        queue.erase(queue.begin());
        for (int x : old_nbrs) queue.erase({ws.degree(x), x});
        ws.contract_edge(target, v);
        for (int x : old_nbrs)
            if (x != v && ws.is_active(x)) queue.emplace(ws.degree(x), x);
    }
    res.elapsed = since(t0);
    return res;
}

Graph improve_graph(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("improve_graph: k must be >= 0");
    Graph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        // candidate pairs are at distance two; enumerate wedges
        std::vector<std::pair<int, int>> cand;
        for (int c = 0; c < cur.num_vertices(); ++c) {
            const auto& nb = cur.neighbors(c);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!cur.has_edge(nb[i], nb[j])) cand.emplace_back(nb[i], nb[j]);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (auto [a, b] : cand) {
            if (cur.has_edge(a, b)) continue;
            if (common_neighbors(cur, a, b) >= k + 1) {
                cur.add_edge(a, b);
                changed = true;
            }
        }
    }
    return cur;
}

LbnBase lbn_base_from_string(const std::string& s) {
    if (s == "mmd") return LbnBase::MMD;
    if (s == "delta2d") return LbnBase::Delta2D;
    if (s == "mmd+") return LbnBase::MMDPlus;
    throw std::invalid_argument("unknown lower-bound base: " + s);
}

const char* to_string(LbnBase b) {
    switch (b) {
        case LbnBase::MMD: return "mmd";
        case LbnBase::Delta2D: return "delta2d";
        case LbnBase::MMDPlus: return "mmd+";
    }
    return "?";
}

namespace {

int base_value(const Graph& g, LbnBase base, const LowerBoundOptions& options) {
    switch (base) {
        case LbnBase::MMD: return mmd(g, options).value;
        case LbnBase::Delta2D:
            return g.num_vertices() < 2 ? 0 : delta2d(g, std::nullopt, options)->value;
        case LbnBase::MMDPlus: return mmd_plus(g, options).value;
    }
    return 0;
}

// One least-c contraction of the min-degree vertex; returns false when
// nothing is left to contract.
bool contract_once(Graph& g) {
    if (g.num_vertices() < 2) return false;
    int v = 0;
    for (int u = 1; u < g.num_vertices(); ++u)
        if (g.degree(u) < g.degree(v)) v = u;
    Workspace ws(g);
    if (g.degree(v) == 0) {
        ws.remove_vertex(v);
    } else {
        int target = -1;
        long long best_common = -1;
        for (int u : g.neighbors(v)) {
            long long c = common_neighbors(g, v, u);
            if (target < 0 || c < best_common) {
                target = u;
                best_common = c;
            }
        }
        ws.contract_edge(target, v);
    }
    g = ws.to_graph();
    return true;
}

LowerBoundResult lbn_impl(const Graph& g, LbnBase base, bool with_contraction,
                          const LowerBoundOptions& options) {
    auto t0 = Clock::now();
    LowerBoundResult res;
    res.algorithm = std::string(with_contraction ? "lbn+:" : "lbn:") + to_string(base);
    res.value = base_value(g, base, options);
    for (;;) {
        if (out_of_budget(options, t0)) {
            res.terminated_by = Termination::Timeout;
            break;
        }
        // Refutation round: assuming tw <= value, improvement and edge
        // contraction both keep tw <= value, so a base estimate above
        // value certifies value + 1. The added edges are only valid under
        // that assumption, hence each round restarts from the input graph
        // and gains at most one.
        Graph improved = improve_graph(g, res.value);
        bool refuted = base_value(improved, base, options) > res.value;
        while (!refuted && with_contraction) {
            if (out_of_budget(options, t0)) {
                res.terminated_by = Termination::Timeout;
                break;
            }
            if (!contract_once(improved)) break;
            improved = improve_graph(improved, res.value);
            refuted = base_value(improved, base, options) > res.value;
        }
        if (!refuted) break;
        ++res.value;
    }
    res.elapsed = since(t0);
    return res;
}

}  // namespace

LowerBoundResult lbn(const Graph& g, LbnBase base, const LowerBoundOptions& options) {
    return lbn_impl(g, base, /*with_contraction=*/false, options);
}

LowerBoundResult lbn_plus(const Graph& g, LbnBase base, const LowerBoundOptions& options) {
    return lbn_impl(g, base, /*with_contraction=*/true, options);
}

}  // namespace tw
