#include "tw/synthetic.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace tw;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (a.neighbors(v) != b.neighbors(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("erdos-renyi: extremes, determinism, edge count concentration") {
    CHECK(synthetic::erdos_renyi(100, 0.0, 1).num_edges() == 0);
    CHECK(synthetic::erdos_renyi(40, 1.0, 1).num_edges() == 40 * 39 / 2);
    CHECK(synthetic::erdos_renyi(0, 0.5, 1).num_vertices() == 0);

    Graph a = synthetic::erdos_renyi(500, 0.01, 42);
    Graph b = synthetic::erdos_renyi(500, 0.01, 42);
    CHECK(same_graph(a, b));
    CHECK_FALSE(same_graph(a, synthetic::erdos_renyi(500, 0.01, 43)));
    a.check_consistency();

    // mean = C(n,2) p, sd = sqrt(mean (1-p)); stay within 5 sd
    double pairs = 500.0 * 499.0 / 2.0;
    double mean = pairs * 0.01;
    double sd = std::sqrt(mean * 0.99);
    CHECK(std::abs(a.num_edges() - mean) < 5 * sd);

    CHECK_THROWS_AS(synthetic::erdos_renyi(10, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(synthetic::erdos_renyi(10, 1.5, 1), std::invalid_argument);
}

TEST_CASE("preferential attachment: edge count, min degree, determinism") {
    for (int m : {1, 2, 3}) {
        Graph g = synthetic::preferential_attachment(200, m, 7);
        g.check_consistency();
        long long expected = (long long)(m + 1) * m / 2 + (long long)(200 - m - 1) * m;
        CHECK(g.num_edges() == expected);
        for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) >= m);
    }
    CHECK(same_graph(synthetic::preferential_attachment(100, 2, 9),
                     synthetic::preferential_attachment(100, 2, 9)));
    CHECK_THROWS_AS(synthetic::preferential_attachment(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(synthetic::preferential_attachment(10, 0, 1), std::invalid_argument);
}

TEST_CASE("preferential attachment skews the degree distribution") {
    Graph g = synthetic::preferential_attachment(2000, 2, 11);
    int max_deg = 0;
    for (int v = 0; v < g.num_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
    CHECK(max_deg > 20);  // hubs emerge; a uniform graph would stay near 4
}

TEST_CASE("small world: exact edge count, lattice at p=0, determinism") {
    Graph lattice = synthetic::small_world(30, 3, 0.0, 5);
    CHECK(lattice.num_edges() == 30 * 3);
    for (int v = 0; v < 30; ++v) {
        CHECK(lattice.degree(v) == 6);
        for (int d = 1; d <= 3; ++d) CHECK(lattice.has_edge(v, (v + d) % 30));
    }

    for (double p : {0.05, 0.1, 0.5, 1.0}) {
        Graph g = synthetic::small_world(200, 4, p, 13);
        g.check_consistency();
        CHECK(g.num_edges() == 200 * 4);
    }
    CHECK(same_graph(synthetic::small_world(100, 2, 0.1, 3),
                     synthetic::small_world(100, 2, 0.1, 3)));
    CHECK_FALSE(same_graph(synthetic::small_world(100, 2, 0.1, 3),
                           synthetic::small_world(100, 2, 0.1, 4)));

    CHECK_THROWS_AS(synthetic::small_world(6, 3, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(synthetic::small_world(10, 2, -0.5, 1), std::invalid_argument);
}
