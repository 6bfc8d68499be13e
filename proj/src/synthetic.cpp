#include "tw/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tw::synthetic {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in [0,1]");
}

}  // namespace

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("erdos_renyi: n must be >= 0");
    check_probability(p, "p");
    Graph g(n);
    if (p == 0.0 || n < 2) return g;
    std::mt19937_64 rng(seed);
    if (p == 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    // skip-sampling over the linearized strict upper triangle
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double log1mp = std::log1p(-p);
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long idx = -1;
    while (true) {
        double r = unif(rng);
        idx += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log1mp));
        if (idx >= total) break;
        // invert idx -> (u,v), u < v
        long long rem = idx;
        int u = 0;
        while (rem >= n - 1 - u) {
            rem -= n - 1 - u;
            ++u;
        }
        int v = u + 1 + static_cast<int>(rem);
        g.add_edge(u, v);
    }
    return g;
}

Graph preferential_attachment(int n, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("preferential_attachment: m must be >= 1");
    if (n <= m) throw std::invalid_argument("preferential_attachment: need n > m");
    std::mt19937_64 rng(seed);
    Graph g(n);
    // degree-proportional sampling via the endpoint multiset
    std::vector<int> endpoints;
    endpoints.reserve(2ll * m * n);
    for (int u = 0; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) {
            g.add_edge(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<int> chosen;
    for (int v = m + 1; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            std::uniform_int_distribution<size_t> pick(0, endpoints.size() - 1);
            int u = endpoints[pick(rng)];
            if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
        }
        for (int u : chosen) {
            g.add_edge(v, u);
            endpoints.push_back(v);
            endpoints.push_back(u);
        }
    }
    return g;
}

Graph small_world(int n, int m, double p_rewire, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("small_world: m must be >= 1");
    if (n <= 2 * m) throw std::invalid_argument("small_world: need n > 2m");
    check_probability(p_rewire, "p_rewire");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> anyv(0, n - 1);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int k = 1; k <= m; ++k) {
            int v = (u + k) % n;
            if (unif(rng) < p_rewire) {
                int w;
                do {
                    w = anyv(rng);
                } while (w == u || g.has_edge(u, w));
                g.add_edge(u, w);
            } else {
                // lattice edge may collide with an earlier rewired one
                if (!g.add_edge(u, v)) {
                    int w;
                    do {
                        w = anyv(rng);
                    } while (w == u || g.has_edge(u, w));
                    g.add_edge(u, w);
                }
            }
        }
    return g;
}

}  // namespace tw::synthetic
