#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toughcirc/enumerate.hpp"
#include "toughcirc/graph.hpp"
#include "toughcirc/invariants.hpp"
#include "toughcirc/surgery.hpp"
#include "toughcirc/verifier.hpp"

namespace py = pybind11;
namespace tc = toughcirc;

namespace {

std::optional<std::vector<tc::Vertex>> cycle_verts(const std::optional<tc::OrientedCycle>& c) {
  if (!c) return std::nullopt;
  return c->verts;
}

tc::TheoremId theorem_or_throw(const std::string& name) {
  auto id = tc::parse_theorem(name);
  if (!id) throw py::value_error("unknown theorem '" + name + "'");
  return *id;
}

std::vector<tc::TheoremId> theorems_of(const std::vector<std::string>& names) {
  std::vector<tc::TheoremId> out;
  for (const auto& n : names) out.push_back(theorem_or_throw(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toughness, connectivity and circumference; cycle surgery; theorem checks";

  py::register_exception<tc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<tc::GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<tc::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<tc::Edge>& edges) { return tc::Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<tc::Edge>{})
      .def_property_readonly("order", &tc::Graph::order)
      .def_property_readonly("edge_count", &tc::Graph::edge_count)
      .def("edges", &tc::Graph::edges)
      .def("degree", &tc::Graph::degree)
      .def("neighbors", [](const tc::Graph& g, tc::Vertex v) { return g.neighbors(v).to_vector(); })
      .def("adjacent", &tc::Graph::adjacent)
      .def("graph6", [](const tc::Graph& g) { return tc::encode_graph6(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const tc::Graph& g) { return "<Graph " + tc::encode_graph6(g) + ">"; });

  m.def("parse_graph6", [](const std::string& s) { return tc::parse_graph6(s); });
  m.def("encode_graph6", &tc::encode_graph6);

  m.def("complete", &tc::complete);
  m.def("cycle_graph", &tc::cycle_graph);
  m.def("path_graph", &tc::path_graph);
  m.def("complete_bipartite", &tc::complete_bipartite);
  m.def("petersen", &tc::petersen);
  m.def("random_gnp", &tc::random_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("connected_graphs", &tc::connected_graphs);

  m.def("min_degree", &tc::min_degree);
  m.def("is_connected", &tc::is_connected);
  m.def("is_petersen", &tc::is_petersen);
  m.def("vertex_connectivity", &tc::vertex_connectivity);
  m.def("is_hamiltonian", &tc::is_hamiltonian);

  // (num, den) or None when infinite.
  m.def("_toughness", [](const tc::Graph& g) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
    tc::Toughness t = tc::toughness(g);
    if (t.infinite) return std::nullopt;
    return std::make_pair(t.value.num, t.value.den);
  });

  m.def("circumference", [](const tc::Graph& g) {
    tc::Circumference c = tc::circumference(g);
    return py::make_tuple(c.length, cycle_verts(c.witness));
  });

  m.def(
      "heuristic_longest_cycle",
      [](const tc::Graph& g, std::uint64_t seed, int restarts) {
        tc::SurgeryLimits limits;
        limits.restarts = restarts;
        return cycle_verts(tc::heuristic_longest_cycle(g, seed, limits));
      },
      py::arg("g"), py::arg("seed") = 1, py::arg("restarts") = 16);

  m.def("improve_once", [](const tc::Graph& g, const std::vector<tc::Vertex>& cycle) {
    tc::OrientedCycle c{cycle};
    if (!tc::is_valid_cycle(g, c)) throw py::value_error("not a cycle of the graph");
    return cycle_verts(tc::improve_once(g, c));
  });

  m.def("check", [](const tc::Graph& g, const std::string& theorem) {
    return tc::status_name(tc::check(theorem_or_throw(theorem), tc::make_profile(g)).status);
  });

  m.def(
      "verify",
      [](const std::vector<std::string>& lines, const std::vector<std::string>& theorems, int workers) {
        std::ostringstream text;
        for (const auto& l : lines) text << l << '\n';
        std::istringstream in(text.str());
        const auto selection = theorems_of(theorems);
        tc::Report r;
        {
          py::gil_scoped_release release;
          r = tc::batch_verify(in, selection, {}, workers, "python");
        }
        std::vector<std::string> records;
        for (const auto& res : r.results) {
          for (const auto& v : res.verdicts) records.push_back(tc::format_record(v));
        }
        py::dict out;
        out["records"] = records;
        out["counterexamples"] = r.total_counterexamples();
        out["parse_failures"] = r.parse_failures.size();
        return out;
      },
      py::arg("lines"), py::arg("theorems") = std::vector<std::string>{"A", "B", "1", "C1", "L1", "L2", "L3"},
      py::arg("workers") = 1);
}
