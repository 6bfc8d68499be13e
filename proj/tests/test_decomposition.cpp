#include "tw/decomposition.hpp"

#include "tw/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace tw;

namespace {

EliminationOrdering full_order(std::vector<int> order) {
    return EliminationOrdering{std::move(order), false, 0};
}

// identity ordering 0..n-1
EliminationOrdering identity(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return full_order(std::move(order));
}

}  // namespace

TEST_CASE("width and validate on a handmade decomposition") {
    // path a-b-c with bags {a,b},{b,c}
    Graph p = twtest::path(3);
    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    CHECK(width(td) == 1);
    CHECK(validate(p, td).ok());

    CHECK_THROWS(width(TreeDecomposition{}));
}

TEST_CASE("validate flags each failure mode separately") {
    Graph p = twtest::path(3);

    // vertex 2 missing
    ValidationReport r1 = validate(p, {{{0, 1}}, {}});
    CHECK_FALSE(r1.vertices_covered);

    // edge 1-2 in no bag
    ValidationReport r2 = validate(p, {{{0, 1}, {2}}, {{0, 1}}});
    CHECK(r2.vertices_covered);
    CHECK_FALSE(r2.edges_covered);

    // vertex 1 occupies two disconnected bags
    ValidationReport r3 = validate(p, {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}});
    CHECK(r3.edges_covered);
    CHECK_FALSE(r3.connected_subtrees);

    // cycle among the bags
    ValidationReport r4 = validate(p, {{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}});
    CHECK_FALSE(r4.tree_shape);
    CHECK_FALSE(r4.ok());
    CHECK_FALSE(r4.detail.empty());

    // out-of-range vertex is structural, not a mere failure
    CHECK_THROWS_AS(validate(p, {{{0, 7}}, {}}), StructuralError);
    CHECK_THROWS_AS(validate(p, {{{0, 1, 2}}, {{0, 5}}}), StructuralError);
}

TEST_CASE("disconnected graphs validate against forests") {
    Graph g(4);  // two disjoint edges
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    TreeDecomposition forest{{{0, 1}, {2, 3}}, {}};
    CHECK(validate(g, forest).ok());

    // a forest with more components than the graph fails tree_shape
    Graph p = twtest::path(3);
    ValidationReport r = validate(p, {{{0, 1}, {1, 2}}, {}});
    CHECK_FALSE(r.tree_shape);
}

TEST_CASE("decomposition_from_ordering on the example ordering") {
    Graph g = twtest::running_example();
    // labels (7,1,6,3,5,2,4) -> dense ids
    EliminationOrdering omega = full_order({6, 0, 5, 2, 4, 1, 3});
    TreeDecomposition td = decomposition_from_ordering(g, omega);
    REQUIRE(td.bags.size() == 7);
    CHECK(width(td) == 3);
    CHECK(validate(g, td).ok());
    // first three bags: {7,6},{1,2,3},{6,3,5} in labels
    CHECK(td.bags[0] == std::vector<int>{5, 6});
    CHECK(td.bags[1] == std::vector<int>{0, 1, 2});
    CHECK(td.bags[2] == std::vector<int>{2, 4, 5});
}

TEST_CASE("triangulation of the example ordering adds exactly edge 3-5") {
    Graph g = twtest::running_example();
    EliminationOrdering omega = full_order({6, 0, 5, 2, 4, 1, 3});
    Graph h = triangulate(g, omega);
    CHECK(h.num_edges() == g.num_edges() + 1);
    CHECK(h.has_edge(2, 4));  // labels 3 and 5
    CHECK(oracle::is_chordal(h));
    CHECK(max_clique_of_triangulation(g, omega) == 4);

    CHECK_THROWS_AS(triangulate(g, EliminationOrdering{{6, 0}, true, 4}),
                    std::invalid_argument);
}

TEST_CASE("triangulation is always chordal and contains the graph") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        Graph g = twtest::random_graph(12, 0.25, rng);
        std::vector<int> order(12);
        for (int i = 0; i < 12; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        EliminationOrdering omega = full_order(order);

        Graph h = triangulate(g, omega);
        CHECK(oracle::is_chordal(h));
        for (int v = 0; v < 12; ++v)
            for (int u : g.neighbors(v)) CHECK(h.has_edge(v, u));

        TreeDecomposition td = decomposition_from_ordering(g, omega);
        CHECK(validate(g, td).ok());
        CHECK(width(td) + 1 == max_clique_of_triangulation(g, omega));
        CHECK(width(td) >= oracle::exact_treewidth(g));
    }
}

TEST_CASE("truncated orderings produce a residual root bag") {
    Graph g = twtest::cycle(6);
    EliminationOrdering omega{{0, 1}, true, 4};
    TreeDecomposition td = decomposition_from_ordering(g, omega);
    REQUIRE(td.bags.size() == 3);
    CHECK(td.bags.back() == std::vector<int>{2, 3, 4, 5});
    CHECK(validate(g, td).ok());
    CHECK(width(td) == 3);
}

TEST_CASE("pace round trip") {
    Graph g = twtest::running_example();
    EliminationOrdering omega = full_order({6, 0, 5, 2, 4, 1, 3});
    TreeDecomposition td = decomposition_from_ordering(g, omega);

    std::ostringstream out;
    write_pace(out, td, g.num_vertices());
    std::string text = out.str();
    CHECK(text.rfind("s td 7 4 7", 0) == 0);

    std::istringstream in(text);
    TreeDecomposition back = read_pace(in);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges.size() == td.tree_edges.size());
    CHECK(validate(g, back).ok());

    std::istringstream junk("not a decomposition\n");
    CHECK_THROWS_AS(read_pace(junk), ParseError);
}
