#pragma once

#include "tw/graph.hpp"

#include <random>
#include <vector>

namespace twtest {

// The 7-vertex example graph shipped as data/running_example.txt,
// built directly on dense ids 0..6 (vertex k has file label k+1).
inline tw::Graph running_example() {
    tw::Graph g(7);
    const int edges[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5},
                            {3, 4}, {3, 6}, {4, 5}, {5, 6}, {6, 7}};
    for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
    return g;
}

inline tw::Graph clique(int n) {
    tw::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline tw::Graph path(int n) {
    tw::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline tw::Graph cycle(int n) {
    tw::Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline tw::Graph grid(int rows, int cols) {
    tw::Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

inline tw::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    tw::Graph g(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < p) g.add_edge(u, v);
    return g;
}

// Random tree on n vertices (uniform attachment).
inline tw::Graph random_tree(int n, std::mt19937_64& rng) {
    tw::Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

}  // namespace twtest
