#include "tw/upper_bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <tuple>

namespace tw {

const char* to_string(GreedyCriterion c) {
    switch (c) {
        case GreedyCriterion::Degree: return "degree";
        case GreedyCriterion::FillIn: return "fillin";
        case GreedyCriterion::DegreeFillIn: return "degfill";
    }
    return "?";
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::Completed: return "completed";
        case Termination::EarlyStop: return "early_stop";
        case Termination::Timeout: return "timeout";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::uint32_t> tie_priorities(int n, TieBreak tie) {
    std::vector<std::uint32_t> pri(n);
    std::iota(pri.begin(), pri.end(), 0u);
    if (tie.kind == TieBreak::Kind::Random) {
        std::mt19937_64 rng(tie.seed);
        std::shuffle(pri.begin(), pri.end(), rng);
    }
    return pri;
}

// Adapter over the sorted-vector Workspace; usable at any vertex count.
class SparseElim {
public:
    explicit SparseElim(const Graph& g) : ws_(g) {}

    int degree(int v) const { return ws_.degree(v); }
    bool is_active(int v) const { return ws_.is_active(v); }
    int active_count() const { return ws_.active_count(); }

    const std::vector<int>& neighbors(int v) const { return ws_.neighbors(v); }

    long long fill_score(int v) const {
        const auto& nb = ws_.neighbors(v);
        long long missing = 0;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!ws_.has_edge(nb[i], nb[j])) ++missing;
        return missing;
    }

    long long eliminate(int v) { return ws_.eliminate(v); }

    std::vector<int> residue() const { return ws_.active_vertices(); }

private:
    Workspace ws_;
};

// Bitset-row workspace for moderate vertex counts; fill-in merges are
// word-parallel, which keeps dense endgames affordable.
class DenseElim {
public:
    explicit DenseElim(const Graph& g)
        : n_(g.num_vertices()),
          words_((n_ + 63) / 64),
          bits_(static_cast<size_t>(n_) * words_, 0),
          deg_(n_),
          active_(n_, 1),
          active_count_(n_) {
        for (int v = 0; v < n_; ++v) {
            deg_[v] = g.degree(v);
            auto* r = row(v);
            for (int u : g.neighbors(v)) r[u >> 6] |= 1ull << (u & 63);
        }
    }

    int degree(int v) const { return deg_[v]; }
    bool is_active(int v) const { return active_[v] != 0; }
    int active_count() const { return active_count_; }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(deg_[v]);
        const auto* r = row(v);
        for (int w = 0; w < words_; ++w)
            for (std::uint64_t word = r[w]; word; word &= word - 1)
                out.push_back((w << 6) + std::countr_zero(word));
        return out;
    }

    long long fill_score(int v) const {
        const auto* rv = row(v);
        long long missing = 0;
        for (int u : neighbors(v)) {
            const auto* ru = row(u);
            int cnt = 0;
            for (int w = 0; w < words_; ++w) cnt += std::popcount(rv[w] & ~ru[w]);
            missing += cnt - 1;  // bit u itself is in rv but never in ru
        }
        return missing / 2;
    }

    long long eliminate(int v) {
        auto nbrs = neighbors(v);
        auto* rv = row(v);
        long long added_total = 0;
        for (int u : nbrs) {
            auto* ru = row(u);
            int uword = u >> 6;
            std::uint64_t umask = 1ull << (u & 63);
            int added = 0;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t incoming = rv[w];
                if (w == uword) incoming &= ~umask;
                std::uint64_t fresh = incoming & ~ru[w];
                added += std::popcount(fresh);
                ru[w] |= fresh;
            }
            deg_[u] += added;
            added_total += added;
        }
        int vword = v >> 6;
        std::uint64_t vmask = 1ull << (v & 63);
        for (int u : nbrs) {
            row(u)[vword] &= ~vmask;
            --deg_[u];
        }
        std::fill(rv, rv + words_, 0);
        deg_[v] = 0;
        active_[v] = 0;
        --active_count_;
        return added_total / 2;  // each fill edge is counted from both endpoints
    }

    std::vector<int> residue() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (active_[v]) out.push_back(v);
        return out;
    }

private:
    std::uint64_t* row(int v) { return bits_.data() + static_cast<size_t>(v) * words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    int n_, words_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
    std::vector<char> active_;
    int active_count_;
};

template <class WS>
long long criterion_score(const WS& ws, int v, GreedyCriterion criterion) {
    switch (criterion) {
        case GreedyCriterion::Degree: return ws.degree(v);
        case GreedyCriterion::FillIn: return ws.fill_score(v);
        case GreedyCriterion::DegreeFillIn: return ws.degree(v) + ws.fill_score(v);
    }
    return 0;
}

template <class WS>
UpperBoundResult run_greedy(const Graph& g, GreedyCriterion criterion, TieBreak tie,
                            const UpperBoundOptions& options) {
    const int n = g.num_vertices();
    const auto t0 = Clock::now();
    WS ws(g);

    auto pri = tie_priorities(n, tie);
    using Entry = std::tuple<long long, std::uint32_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<long long> cur(n);
    for (int v = 0; v < n; ++v) {
        cur[v] = criterion_score(ws, v, criterion);
        heap.emplace(cur[v], pri[v], v);
    }

    UpperBoundResult result;
    std::vector<std::vector<int>> bags;
    std::vector<int> order;
    order.reserve(n);
    int max_bag = 0;
    long long fill_total = 0;
    Termination term = Termination::Completed;

    const bool need_fill = criterion != GreedyCriterion::Degree;
    std::vector<int> affected;
    std::vector<char> in_affected(n, 0);
    int since_check = 0;

    auto emit_checkpoint = [&] {
        if (!options.checkpoint_csv) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
        *options.checkpoint_csv << ms.count() << "," << order.size() << ","
                                << std::max(max_bag - 1, 0) << "\n";
    };

    while (ws.active_count() > 0) {
        if (ws.active_count() <= max_bag) {
            term = Termination::EarlyStop;
            break;
        }
        if (++since_check >= options.checkpoint_interval) {
            since_check = 0;
            emit_checkpoint();
            if (options.budget && Clock::now() - t0 >= *options.budget) {
                term = Termination::Timeout;
                break;
            }
        }

        int v;
        for (;;) {
            auto [s, p, cand] = heap.top();
            if (!ws.is_active(cand) || s != cur[cand]) {
                heap.pop();
                continue;
            }
            v = cand;
            heap.pop();
            break;
        }

        auto nbrs = ws.neighbors(v);
        std::vector<int> bag;
        bag.reserve(nbrs.size() + 1);
        bag.push_back(v);
        bag.insert(bag.end(), nbrs.begin(), nbrs.end());
        std::sort(bag.begin(), bag.end());
        max_bag = std::max(max_bag, static_cast<int>(bag.size()));
        bags.push_back(std::move(bag));
        order.push_back(v);

        affected.clear();
        for (int u : nbrs)
            if (!in_affected[u]) {
                in_affected[u] = 1;
                affected.push_back(u);
            }
        if (need_fill) {
            // fill scores can change across the whole 2-neighborhood
            for (int u : nbrs)
                for (int x : ws.neighbors(u))
                    if (x != v && !in_affected[x]) {
                        in_affected[x] = 1;
                        affected.push_back(x);
                    }
        }

        fill_total += ws.eliminate(v);

        for (int u : affected) {
            in_affected[u] = 0;
            if (!ws.is_active(u)) continue;
            long long s = criterion_score(ws, u, criterion);
            if (s != cur[u]) {
                cur[u] = s;
                heap.emplace(s, pri[u], u);
            }
        }
    }

    auto residue = ws.residue();
    emit_checkpoint();

    result.ordering.order = std::move(order);
    result.ordering.truncated = !residue.empty();
    result.ordering.residual_clique_size = static_cast<int>(residue.size());
    result.fill_edges_added = fill_total;
    result.terminated_by = term;
    result.decomposition =
        detail::assemble_bags(std::move(bags), result.ordering.order, residue, n);
    result.width_ub =
        n == 0 ? 0 : std::max({max_bag, static_cast<int>(residue.size()), 1}) - 1;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return result;
}

}  // namespace

UpperBoundResult greedy_upper_bound(const Graph& g, GreedyCriterion criterion, TieBreak tie,
                                    const UpperBoundOptions& options) {
    if (g.num_vertices() <= options.dense_threshold)
        return run_greedy<DenseElim>(g, criterion, tie, options);
    return run_greedy<SparseElim>(g, criterion, tie, options);
}

int score(const Workspace& ws, int v, GreedyCriterion criterion) {
    if (!ws.is_active(v)) throw std::invalid_argument("score of removed vertex");
    auto fill = [&] {
        const auto& nb = ws.neighbors(v);
        long long missing = 0;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!ws.has_edge(nb[i], nb[j])) ++missing;
        return missing;
    };
    switch (criterion) {
        case GreedyCriterion::Degree: return ws.degree(v);
        case GreedyCriterion::FillIn: return static_cast<int>(fill());
        case GreedyCriterion::DegreeFillIn: return static_cast<int>(ws.degree(v) + fill());
    }
    return 0;
}

}  // namespace tw
