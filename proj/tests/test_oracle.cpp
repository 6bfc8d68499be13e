#include "tw/oracle.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace tw;

TEST_CASE("exact treewidth of standard families") {
    CHECK(oracle::exact_treewidth(Graph(0)) == 0);
    CHECK(oracle::exact_treewidth(Graph(1)) == 0);
    CHECK(oracle::exact_treewidth(Graph(5)) == 0);
    CHECK(oracle::exact_treewidth(twtest::path(8)) == 1);
    CHECK(oracle::exact_treewidth(twtest::cycle(8)) == 2);
    for (int n = 2; n <= 8; ++n) CHECK(oracle::exact_treewidth(twtest::clique(n)) == n - 1);
    CHECK(oracle::exact_treewidth(twtest::grid(3, 3)) == 3);
    CHECK(oracle::exact_treewidth(twtest::grid(3, 4)) == 3);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it)
        CHECK(oracle::exact_treewidth(twtest::random_tree(10, rng)) == 1);

    CHECK_THROWS_AS(oracle::exact_treewidth(Graph(20)), std::invalid_argument);
}

TEST_CASE("exact treewidth of the example graph is 3") {
    CHECK(oracle::exact_treewidth(twtest::running_example()) == 3);
}

TEST_CASE("brute degeneracy") {
    CHECK(oracle::brute_degeneracy(twtest::path(6)) == 1);
    CHECK(oracle::brute_degeneracy(twtest::cycle(6)) == 2);
    CHECK(oracle::brute_degeneracy(twtest::clique(5)) == 4);
    CHECK(oracle::brute_degeneracy(twtest::grid(3, 3)) == 2);
    CHECK(oracle::brute_degeneracy(twtest::running_example()) == 2);
}

TEST_CASE("brute delta2-degeneracy") {
    CHECK(oracle::brute_delta2_degeneracy(twtest::clique(5)) == 4);
    CHECK(oracle::brute_delta2_degeneracy(twtest::path(6)) == 1);
    CHECK(oracle::brute_delta2_degeneracy(twtest::cycle(6)) == 2);
    // subgraph on labels {2,3,4,5,6} has degrees (3,3,3,3,2)
    CHECK(oracle::brute_delta2_degeneracy(twtest::running_example()) == 3);
    CHECK_THROWS_AS(oracle::brute_delta2_degeneracy(Graph(1)), std::invalid_argument);
}

TEST_CASE("degeneracy lower-bounds treewidth on random graphs") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        Graph g = twtest::random_graph(10, 0.3, rng);
        int d = oracle::brute_degeneracy(g);
        int d2 = oracle::brute_delta2_degeneracy(g);
        int tw = oracle::exact_treewidth(g);
        CHECK(d <= d2);
        CHECK(d2 <= tw);
    }
}

TEST_CASE("chordality") {
    CHECK(oracle::is_chordal(twtest::clique(6)));
    CHECK(oracle::is_chordal(twtest::path(6)));
    CHECK(oracle::is_chordal(twtest::clique(3)));
    CHECK_FALSE(oracle::is_chordal(twtest::cycle(4)));
    CHECK_FALSE(oracle::is_chordal(twtest::cycle(7)));
    CHECK_FALSE(oracle::is_chordal(twtest::grid(3, 3)));
    CHECK(oracle::is_chordal(Graph(0)));
    CHECK(oracle::is_chordal(Graph(3)));

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) CHECK(oracle::is_chordal(twtest::random_tree(15, rng)));

    // C4 plus a chord is chordal
    Graph g = twtest::cycle(4);
    g.add_edge(0, 2);
    CHECK(oracle::is_chordal(g));
}
