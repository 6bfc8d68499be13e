// pybind11 bindings for the treewidth estimation toolkit.

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/lower_bounds.hpp"
#include "tw/oracle.hpp"
#include "tw/partial.hpp"
#include "tw/regression.hpp"
#include "tw/synthetic.hpp"
#include "tw/upper_bounds.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace py::literals;
using namespace tw;

namespace {

GreedyCriterion criterion_from_string(const std::string& s) {
    if (s == "degree") return GreedyCriterion::Degree;
    if (s == "fillin") return GreedyCriterion::FillIn;
    if (s == "degfill") return GreedyCriterion::DegreeFillIn;
    throw std::invalid_argument("criterion must be degree|fillin|degfill");
}

TieBreak tie_from_args(const std::string& tie, std::uint64_t seed) {
    if (tie == "id") return TieBreak::by_id();
    if (tie == "random") return TieBreak::random(seed);
    throw std::invalid_argument("tie must be id or random");
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

PYBIND11_MODULE(_treewidth, m) {
    m.doc() = "Treewidth bound estimation for large sparse graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("label", &Graph::label, py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return out.str();
        });

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def_readonly("bags", &TreeDecomposition::bags)
        .def_readonly("tree_edges", &TreeDecomposition::tree_edges)
        .def_property_readonly("width", [](const TreeDecomposition& td) { return width(td); })
        .def("to_pace", [](const TreeDecomposition& td, int n) {
            std::ostringstream out;
            write_pace(out, td, n);
            return out.str();
        }, py::arg("n"));

    m.def("load_edge_list", [](const std::string& path) { return load_edge_list_file(path); },
          py::arg("path"), "Load a SNAP-style whitespace edge list.");

    m.def("validate", [](const Graph& g, const TreeDecomposition& td) {
        ValidationReport r = validate(g, td);
        return py::dict("ok"_a = r.ok(), "vertices_covered"_a = r.vertices_covered,
                        "edges_covered"_a = r.edges_covered,
                        "connected_subtrees"_a = r.connected_subtrees,
                        "tree_shape"_a = r.tree_shape, "detail"_a = r.detail);
    }, py::arg("graph"), py::arg("decomposition"));

    m.def("upper_bound",
          [](const Graph& g, const std::string& criterion, const std::string& tie,
             std::uint64_t seed, std::optional<double> budget_ms) {
              UpperBoundOptions opt;
              if (budget_ms) opt.budget = std::chrono::milliseconds((long long)*budget_ms);
              auto res = greedy_upper_bound(g, criterion_from_string(criterion),
                                            tie_from_args(tie, seed), opt);
              return py::dict("width"_a = res.width_ub, "order"_a = res.ordering.order,
                              "decomposition"_a = res.decomposition,
                              "fill_edges"_a = res.fill_edges_added,
                              "terminated_by"_a = std::string(to_string(res.terminated_by)));
          },
          py::arg("graph"), py::arg("criterion") = "degree", py::arg("tie") = "id",
          py::arg("seed") = 0, py::arg("budget_ms") = py::none(),
          "Greedy elimination upper bound.");

    m.def("lower_bound",
          [](const Graph& g, const std::string& algorithm) {
              LowerBoundResult res;
              if (algorithm == "mmd")
                  res = mmd(g);
              else if (algorithm == "mmd+")
                  res = mmd_plus(g);
              else if (algorithm == "delta2d")
                  res = delta2d(g).value();
              else if (algorithm.rfind("lbn+:", 0) == 0)
                  res = lbn_plus(g, lbn_base_from_string(algorithm.substr(5)));
              else if (algorithm.rfind("lbn:", 0) == 0)
                  res = lbn(g, lbn_base_from_string(algorithm.substr(4)));
              else
                  throw std::invalid_argument("unknown lower-bound algorithm: " + algorithm);
              return py::dict("value"_a = res.value, "algorithm"_a = res.algorithm);
          },
          py::arg("graph"), py::arg("algorithm") = "mmd", "Treewidth lower bound.");

    m.def("exact_treewidth", &oracle::exact_treewidth, py::arg("graph"),
          py::arg("max_n") = oracle::kDefaultMaxN,
          "Exact treewidth by subset dynamic programming (small graphs).");

    m.def("core_size_sweep",
          [](const Graph& g, const std::vector<int>& w_values, const std::string& criterion) {
              auto rows = core_size_sweep(g, w_values, criterion_from_string(criterion));
              py::list out;
              for (const auto& r : rows)
                  out.append(py::dict("w"_a = r.w, "core_nodes"_a = r.core_nodes,
                                      "core_edges_with_fill"_a = r.core_edges_with_fill,
                                      "core_edges_original"_a = r.core_edges_original,
                                      "relative_with_fill"_a = r.relative_with_fill,
                                      "relative_original"_a = r.relative_original));
              return out;
          },
          py::arg("graph"), py::arg("w_values"), py::arg("criterion") = "degree",
          "Core sizes after peeling each width in w_values.");

    m.def("erdos_renyi", &synthetic::erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("preferential_attachment", &synthetic::preferential_attachment, py::arg("n"),
          py::arg("m"), py::arg("seed"));
    m.def("small_world", &synthetic::small_world, py::arg("n"), py::arg("m"),
          py::arg("p_rewire"), py::arg("seed"));

    m.def("fit_power_law",
          [](const std::vector<std::pair<double, double>>& points) {
              PowerLawFit fit = fit_power_law(points);
              return py::dict("log_alpha"_a = fit.log_alpha, "beta"_a = fit.beta,
                              "r_squared"_a = fit.r_squared, "p_value"_a = fit.p_value);
          },
          py::arg("points"), "OLS fit of t ~ alpha * n^beta on log-log scale.");
}
