"""Smoke tests for the python bindings."""

import math
import os

import pytest

tw = pytest.importorskip("treewidth_estimation")

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")

EXAMPLE_EDGES = [
    (0, 1), (0, 2), (1, 2), (1, 3), (1, 4),
    (2, 3), (2, 5), (3, 4), (4, 5), (5, 6),
]


def example():
    return tw.Graph(7, EXAMPLE_EDGES)


def test_graph_basics():
    g = example()
    assert g.num_vertices == 7
    assert g.num_edges == 10
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 6)
    assert g.degree(1) == 4


def test_load_edge_list():
    g = tw.load_edge_list(os.path.join(DATA, "running_example.txt"))
    assert g.num_vertices == 7
    assert g.num_edges == 10
    assert g.label(0) == 1


def test_bounds_bracket_exact():
    g = example()
    ub = tw.upper_bound(g, "degfill")
    assert ub["width"] == 3
    assert tw.lower_bound(g, "mmd")["value"] == 2
    assert tw.lower_bound(g, "lbn:mmd")["value"] == 3
    assert tw.exact_treewidth(g) == 3


def test_decomposition_validates():
    g = example()
    res = tw.upper_bound(g, "fillin")
    report = tw.validate(g, res["decomposition"])
    assert report["ok"]
    assert res["decomposition"].width == res["width"]
    assert res["decomposition"].to_pace(7).startswith("s td")


def test_generators_deterministic():
    a = tw.erdos_renyi(200, 0.02, 9)
    b = tw.erdos_renyi(200, 0.02, 9)
    assert a.num_edges == b.num_edges
    assert tw.preferential_attachment(100, 2, 1).num_edges == 3 + 97 * 2
    assert tw.small_world(100, 3, 0.1, 1).num_edges == 300


def test_core_size_sweep():
    rows = tw.core_size_sweep(example(), [0, 1, 2, 3], "degfill")
    assert [r["core_nodes"] for r in rows] == [7, 6, 4, 0]
    assert rows[2]["core_edges_with_fill"] == 6


def test_fit_power_law():
    pts = [(n, 2.0 * math.sqrt(n)) for n in (1, 4, 9, 25, 100)]
    fit = tw.fit_power_law(pts)
    assert fit["beta"] == pytest.approx(0.5)
    assert fit["r_squared"] == pytest.approx(1.0)
