#include "tw/partial.hpp"

#include "tw/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace tw;

TEST_CASE("w=2 peel of the example leaves the 4-clique core") {
    Graph g = twtest::running_example();
    PartialDecomposition pd = partial_decompose(g, 2, GreedyCriterion::DegreeFillIn);
    CHECK(pd.w == 2);
    CHECK(pd.core.num_vertices() == 4);
    CHECK(pd.core.num_edges() == 6);
    // core = labels {2,3,4,5} = dense ids {1,2,3,4}
    std::vector<std::int64_t> labels = pd.core.labels();
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(pd.eliminated.size() == 3);
    // fill edge 3-5 appears in the core but not the input
    CHECK(pd.core_edges_original == 5);
    CHECK(pd.fill_edges_added == 1);

    TreeDecomposition td = assemble_decomposition(pd, g);
    CHECK(validate(g, td).ok());
    CHECK(width(td) == 3);
}

TEST_CASE("peel eligibility uses the current degree") {
    // path: every vertex eventually drops to degree <= 1, so w=1 empties it
    Graph p = twtest::path(10);
    PartialDecomposition pd = partial_decompose(p, 1, GreedyCriterion::Degree);
    CHECK(pd.core.num_vertices() == 0);
    CHECK((int)pd.eliminated.size() == 10);
    CHECK(validate(p, assemble_decomposition(pd, p)).ok());

    // w=0 peels nothing from a connected graph with edges
    PartialDecomposition pd0 = partial_decompose(p, 0, GreedyCriterion::Degree);
    CHECK(pd0.core.num_vertices() == 10);
    CHECK(pd0.eliminated.empty());
}

TEST_CASE("interfaces are cliques of core vertices of size <= w+1") {
    std::mt19937_64 rng(79);
    for (int it = 0; it < 20; ++it) {
        Graph g = twtest::random_graph(30, 0.12, rng);
        for (int w : {1, 2, 3}) {
            PartialDecomposition pd = partial_decompose(g, w, GreedyCriterion::DegreeFillIn);
            CHECK((int)pd.interfaces.size() <= (int)pd.fringe.bags.size());
            for (const auto& itf : pd.interfaces) {
                CHECK((int)itf.size() <= w + 1);
                // clique in the core (after fill)
                auto core_index = [&](int orig) {
                    for (int v = 0; v < pd.core.num_vertices(); ++v)
                        if (pd.core.label(v) == orig) return v;
                    return -1;
                };
                for (std::size_t a = 0; a < itf.size(); ++a)
                    for (std::size_t b = a + 1; b < itf.size(); ++b)
                        CHECK(pd.core.has_edge(core_index(itf[a]), core_index(itf[b])));
            }
            TreeDecomposition td = assemble_decomposition(pd, g);
            CHECK(validate(g, td).ok());
        }
    }
}

TEST_CASE("fringe bags never exceed w+1 vertices") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 15; ++it) {
        Graph g = twtest::random_graph(25, 0.15, rng);
        for (int w : {0, 1, 2, 3, 4}) {
            PartialDecomposition pd = partial_decompose(g, w, GreedyCriterion::Degree);
            for (const auto& bag : pd.fringe.bags) CHECK((int)bag.size() <= w + 1);
            CHECK(pd.fringe.bags.size() == pd.eliminated.size());
        }
    }
}

TEST_CASE("a peel width at or above the completed bound empties the core") {
    std::mt19937_64 rng(89);
    for (int it = 0; it < 15; ++it) {
        Graph g = twtest::random_graph(20, 0.2, rng);
        auto ub = greedy_upper_bound(g, GreedyCriterion::Degree);
        PartialDecomposition pd = partial_decompose(g, ub.width_ub, GreedyCriterion::Degree);
        CHECK(pd.core.num_vertices() == 0);
    }
}

TEST_CASE("core sweep on the example") {
    Graph g = twtest::running_example();
    const int ws[] = {0, 1, 2, 3};
    auto rows = core_size_sweep(g, ws, GreedyCriterion::DegreeFillIn);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].core_nodes == 7);
    CHECK(rows[0].core_edges_with_fill == 10);
    CHECK(rows[1].core_nodes == 6);  // only vertex 7 peels at w=1
    CHECK(rows[1].core_edges_with_fill == 9);
    CHECK(rows[2].core_nodes == 4);
    CHECK(rows[2].core_edges_with_fill == 6);
    CHECK(rows[2].core_edges_original == 5);
    CHECK(rows[3].core_nodes == 0);
    CHECK(rows[3].core_edges_with_fill == 0);
    CHECK(rows[0].relative_with_fill == doctest::Approx(1.0));
    CHECK(rows[2].relative_with_fill == doctest::Approx(0.6));
    CHECK(rows[2].relative_original == doctest::Approx(0.5));

    const int bad[] = {2, 1};
    CHECK_THROWS_AS(core_size_sweep(g, bad, GreedyCriterion::Degree), std::invalid_argument);
}

TEST_CASE("core size is monotone in the peel width") {
    std::mt19937_64 rng(97);
    for (int it = 0; it < 15; ++it) {
        Graph g = twtest::random_graph(30, 0.15, rng);
        std::vector<int> ws{0, 1, 2, 3, 4, 5};
        auto rows = core_size_sweep(g, ws, GreedyCriterion::Degree);
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].core_nodes <= rows[i - 1].core_nodes);
    }
}

TEST_CASE("sweep csv format") {
    Graph g = twtest::running_example();
    const int ws[] = {0, 2};
    auto rows = core_size_sweep(g, ws, GreedyCriterion::DegreeFillIn);
    std::ostringstream out;
    write_sweep_csv(out, rows);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line ==
          "w,core_nodes,core_edges_with_fill,core_edges_original,"
          "relative_with_fill,relative_original");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("0,7,10,10,", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("2,4,6,5,", 0) == 0);
}

TEST_CASE("fill budget formula") {
    static_assert(fill_in_edge_budget(0) == 0);
    static_assert(fill_in_edge_budget(1) == 0);
    static_assert(fill_in_edge_budget(2) == 1);
    static_assert(fill_in_edge_budget(5) == 10);
    CHECK(fill_in_edge_budget(3) == 3);
}
