#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "avgconn/connectivity.hpp"
#include "avgconn/extremal.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/minimality.hpp"
#include "avgconn/multigraph.hpp"
#include "avgconn/rational.hpp"
#include "avgconn/transforms.hpp"
#include "avgconn/verify.hpp"

namespace py = pybind11;
using namespace avgconn;

namespace {

Mode mode_of(const std::string& name) {
  if (name == "vertex") return Mode::vertex;
  if (name == "edge") return Mode::edge;
  throw std::invalid_argument("mode must be 'vertex' or 'edge'");
}

py::object fraction(const Rational& r) {
  py::object F = py::module_::import("fractions").attr("Fraction");
  return F(r.num(), r.den());
}

py::dict report_dict(const MultiGraph& g, Mode mode) {
  ConnectivityReport rep = report(g, mode);
  py::dict d;
  d["n"] = rep.n;
  d["mode"] = mode_name(rep.mode);
  d["pair_values"] = rep.pair_values;
  d["total"] = rep.total;
  d["average"] = fraction(rep.average);
  d["global"] = rep.global;
  d["ideal"] = rep.ideal;
  return d;
}

py::dict bound_dict(const BoundRow& row) {
  py::dict d;
  d["n"] = row.n;
  d["mode"] = mode_name(row.mode);
  d["general"] = fraction(row.general);
  d["exact"] = fraction(row.exact);
  d["optimal_s"] = row.optimal_s;
  d["witness"] = row.witness.empty() ? py::object(py::none())
                                     : py::object(py::str(row.witness));
  d["attained"] = row.attained;
  return d;
}

py::dict trace_dict(const TransformTrace& t) {
  py::dict d;
  d["name"] = t.name;
  d["site"] = t.site;
  d["mode"] = mode_name(t.mode);
  d["total_before"] = t.total_before;
  d["total_after"] = t.total_after;
  d["input_minimal"] = t.input_minimal;
  d["output_minimal"] = t.output_minimal;
  d["before"] = t.before;
  d["after"] = t.after;
  return d;
}

py::dict certificate_dict(const OptimalCertificate& cert) {
  py::dict d;
  d["n"] = cert.n;
  d["mode"] = mode_name(cert.mode);
  d["candidates"] = cert.candidate_count;
  d["best"] = fraction(cert.best_average);
  d["winners"] = cert.winners;
  d["witnesses"] = cert.witnesses;
  d["bound"] = fraction(cert.bound);
  d["gap"] = fraction(cert.gap);
  d["bipartite_by_degree_class"] = cert.winners_bipartite_by_degree_class;
  d["two_connected"] = cert.winners_2_connected;
  d["simple"] = cert.winners_simple;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact average vertex/edge connectivity toolkit";
  m.attr("__version__") = "0.1.0";
  m.attr("MINIMUM_CONSTRUCTIVE_ORDER") = minimum_constructive_order;

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("order", &MultiGraph::order)
      .def("size", &MultiGraph::size)
      .def("multiplicity", &MultiGraph::multiplicity)
      .def("degree", &MultiGraph::degree)
      .def("degree_sequence", &MultiGraph::degree_sequence)
      .def("neighbors", &MultiGraph::neighbors)
      .def("edges",
           [](const MultiGraph& g) {
             py::dict d;
             for (const auto& [pr, mult] : g.edges())
               d[py::make_tuple(pr.first, pr.second)] = mult;
             return d;
           })
      .def("add_edge", &MultiGraph::add_edge, py::arg("u"), py::arg("v"),
           py::arg("mult") = 1)
      .def("is_simple", &MultiGraph::is_simple)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        std::ostringstream os;
        os << "MultiGraph(n=" << g.order() << ", m=" << g.size() << ")";
        return os.str();
      });

  // serialization
  m.def("to_graph6", &to_graph6);
  m.def("from_graph6", &from_graph6);
  m.def("to_edge_list", &to_edge_list);
  m.def("from_edge_list", &from_edge_list);

  // families and rewrites
  m.def("cycle", &cycle);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_power", &cycle_power);
  m.def("cycle_bundle", &cycle_bundle);
  m.def("subdivide_all", &subdivide_all);

  // connectivity
  m.def("local_connectivity",
        [](const MultiGraph& g, int u, int v, const std::string& mode) {
          return local_connectivity(g, u, v, mode_of(mode));
        },
        py::arg("g"), py::arg("u"), py::arg("v"), py::arg("mode") = "vertex");
  m.def("total_connectivity",
        [](const MultiGraph& g, const std::string& mode) {
          return total_connectivity(g, mode_of(mode));
        },
        py::arg("g"), py::arg("mode") = "vertex");
  m.def("average_connectivity",
        [](const MultiGraph& g, const std::string& mode) {
          return fraction(report(g, mode_of(mode)).average);
        },
        py::arg("g"), py::arg("mode") = "vertex");
  m.def("report",
        [](const MultiGraph& g, const std::string& mode) {
          return report_dict(g, mode_of(mode));
        },
        py::arg("g"), py::arg("mode") = "vertex");

  // predicates
  m.def("is_minimally_2_connected", &is_minimally_2_connected);
  m.def("is_minimally_2_edge_connected", &is_minimally_2_edge_connected);
  m.def("is_necklace", &is_necklace);
  m.def("is_ideally_connected", &is_ideally_connected);
  m.def("is_ideally_edge_connected", &is_ideally_edge_connected);
  m.def("is_minimally_k_connected",
        [](const MultiGraph& g, int k, const std::string& mode) {
          return is_minimally_k_connected(g, k, mode_of(mode));
        },
        py::arg("g"), py::arg("k"), py::arg("mode") = "vertex");

  // extremal bounds and constructions
  m.def("bound",
        [](int n, const std::string& mode) {
          return bound_dict(mode_of(mode) == Mode::vertex ? kappa_bound(n)
                                                          : lambda_bound(n));
        },
        py::arg("n"), py::arg("mode") = "vertex");
  m.def("search_ideally_connected",
        [](int n, long long mm, unsigned seed) -> py::object {
          auto g = search_ideally_connected(n, mm, seed);
          return g ? py::cast(*g) : py::object(py::none());
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 1);
  m.def("construct_optimal",
        [](int n, const std::string& mode, unsigned seed) -> py::object {
          auto g = mode_of(mode) == Mode::vertex
                       ? construct_optimal_vertex(n, seed)
                       : construct_optimal_edge(n, seed);
          return g ? py::cast(*g) : py::object(py::none());
        },
        py::arg("n"), py::arg("mode") = "vertex", py::arg("seed") = 1);

  // rewrite driver
  m.def("improve_until_fixed",
        [](const MultiGraph& g, const std::string& mode, long long max_steps) {
          auto [result, traces] = improve_until_fixed(g, mode_of(mode),
                                                      max_steps);
          py::list steps;
          for (const TransformTrace& t : traces) steps.append(trace_dict(t));
          return py::make_tuple(result, steps);
        },
        py::arg("g"), py::arg("mode") = "vertex", py::arg("max_steps") = -1);

  // exhaustive certificates
  m.def("find_optimal",
        [](int n, const std::string& mode) {
          return certificate_dict(find_optimal(n, mode_of(mode)));
        },
        py::arg("n"), py::arg("mode") = "vertex");
  m.def("canonical_key", &canonical_key);
}
