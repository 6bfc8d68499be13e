"""Treewidth bound estimation for large sparse graphs."""

from ._treewidth import (
    Graph,
    TreeDecomposition,
    core_size_sweep,
    erdos_renyi,
    exact_treewidth,
    fit_power_law,
    load_edge_list,
    lower_bound,
    preferential_attachment,
    small_world,
    upper_bound,
    validate,
)

__all__ = [
    "Graph",
    "TreeDecomposition",
    "core_size_sweep",
    "erdos_renyi",
    "exact_treewidth",
    "fit_power_law",
    "load_edge_list",
    "lower_bound",
    "preferential_attachment",
    "small_world",
    "upper_bound",
    "validate",
]
