#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbea/experiments.hpp"
#include "mbea/graph.hpp"
#include "mbea/leaf_removal.hpp"
#include "mbea/mbea.hpp"
#include "mbea/oracle.hpp"
#include "mbea/rsg.hpp"
#include "mbea/rsg_ops.hpp"

namespace py = pybind11;
using namespace mbea;

namespace {

std::vector<std::vector<NodeId>> covers_of(const SolutionSet& s) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& a : s.assignments) out.push_back(a.cover());
  return out;
}

Graph make_graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

}  // namespace

PYBIND11_MODULE(_mbea, m) {
  m.doc() = "Backbone and mutual-determination evolution for minimum vertex cover";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<GraphFormatError>(m, "GraphFormatError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<NodeId, NodeId>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("neighbors", [](const Graph& g, NodeId u) {
        auto nb = g.neighbors(u);
        return std::vector<NodeId>(nb.begin(), nb.end());
      })
      .def("__len__", &Graph::size)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate_er", [](NodeId n, double c, std::uint64_t seed) { return generate_er({n, c, seed}); },
        py::arg("n"), py::arg("c"), py::arg("seed") = 0, "G(N, M) graph with M = round(c n / 2) edges.");
  m.def("parse_edge_list", py::overload_cast<std::string_view>(&parse_edge_list), py::arg("text"));
  m.def("write_edge_list", py::overload_cast<const Graph&>(&write_edge_list), py::arg("graph"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));

  py::class_<RankAssignment>(m, "RankAssignment")
      .def_readonly("rank", &RankAssignment::rank)
      .def_property_readonly("in_core",
                             [](const RankAssignment& r) { return std::vector<bool>(r.in_core.begin(), r.in_core.end()); })
      .def_readonly("max_rank", &RankAssignment::max_rank)
      .def_property_readonly("core_empty", &RankAssignment::core_empty)
      .def_property_readonly("core_size", &RankAssignment::core_size);
  m.def("leaf_removal_ranks", &leaf_removal_ranks, py::arg("graph"));

  py::class_<MbeaResult>(m, "MbeaResult")
      .def_readonly("cover_size", &MbeaResult::cover_size)
      .def_property_readonly("case_counts",
                             [](const MbeaResult& r) {
                               py::dict d;
                               for (int k = 0; k < 5; ++k)
                                 d[py::str(std::string(1, static_cast<char>('A' + k)))] = r.case_counts[k];
                               return d;
                             })
      .def_property_readonly("states",
                             [](const MbeaResult& r) {
                               std::vector<std::string> out;
                               for (NodeId u = 0; u < r.rsg.size(); ++u) out.emplace_back(to_string(r.rsg.state(u)));
                               return out;
                             })
      .def_property_readonly("double_edges",
                             [](const MbeaResult& r) {
                               std::vector<std::pair<NodeId, NodeId>> out;
                               const Graph& g = r.rsg.graph();
                               for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e)
                                 if (r.rsg.constrains_pair(e)) out.emplace_back(g.edge(e).u, g.edge(e).v);
                               return out;
                             })
      .def_property_readonly("trace",
                             [](const MbeaResult& r) {
                               py::list out;
                               for (const auto& t : r.trace)
                                 out.append(py::make_tuple(t.node, std::string(1, to_char(t.label)), t.affected));
                               return out;
                             })
      .def(
          "assignments",
          [](const MbeaResult& r, std::size_t limit) { return covers_of(enumerate_assignments(r.rsg, limit)); },
          py::arg("limit") = 0, "Every represented minimum cover as a sorted node list.")
      .def("validate", [](const MbeaResult& r) { return validate(r.rsg); })
      .def("to_json", [](const MbeaResult& r) { return export_json(r.rsg); })
      .def("to_dot", [](const MbeaResult& r) { return export_dot(r.rsg); });

  m.def(
      "run_mbea", [](const Graph& g, bool trace) { return run_mbea(g, trace); }, py::arg("graph"),
      py::arg("trace") = false, py::call_guard<py::gil_scoped_release>());
  m.def(
      "cover_from_rsg", [](const MbeaResult& r) { return cover_from_rsg(r).cover(); }, py::arg("result"));

  m.def("exact_min_cover", &exact_min_cover, py::arg("graph"), py::arg("budget") = kDefaultMinCoverBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "enumerate_min_covers",
      [](const Graph& g, NodeId budget) { return covers_of(enumerate_min_covers(g, budget)); }, py::arg("graph"),
      py::arg("budget") = kDefaultEnumerationBudget);
  m.def(
      "summarize_space",
      [](const Graph& g, NodeId budget) {
        const SpaceSummary s = summarize_space(enumerate_min_covers(g, budget));
        py::dict d;
        d["pos_frozen"] = s.pos_frozen;
        d["neg_frozen"] = s.neg_frozen;
        d["mutual_pairs"] = s.mutual_pairs;
        d["solution_count"] = s.solution_count;
        return d;
      },
      py::arg("graph"), py::arg("budget") = kDefaultEnumerationBudget,
      "Backbones and mutual pairs of the exact minimum-cover space.");

  m.def(
      "experiment",
      [](const std::string& kind, std::vector<double> c, std::vector<NodeId> n, std::size_t instances,
         std::uint64_t seed, unsigned workers, NodeId oracle_budget, const std::string& format) {
        ExperimentConfig cfg;
        cfg.c_grid = std::move(c);
        cfg.n_grid = std::move(n);
        cfg.instances = instances;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.budgets.min_cover = oracle_budget;
        ExperimentReport r;
        {
          py::gil_scoped_release release;
          if (kind == "backbones")
            r = cmd_backbone_fractions(cfg);
          else if (kind == "coverage")
            r = cmd_coverage(cfg);
          else if (kind == "error")
            r = cmd_error_vs_exact(cfg);
          else
            throw ParameterError("unknown experiment \"" + kind + "\"");
        }
        if (format == "json") return to_json(r);
        if (format != "csv") throw ParameterError("format must be csv or json");
        return to_csv(r);
      },
      py::arg("kind"), py::arg("c"), py::arg("n"), py::arg("instances"), py::arg("seed") = 1, py::arg("workers") = 1,
      py::arg("oracle_budget") = kDefaultMinCoverBudget, py::arg("format") = "csv",
      "Runs the backbones, coverage or error ensemble and returns the report text.");
}
