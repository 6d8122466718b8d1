// Python bindings for the gperm library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gperm/census.hpp"
#include "gperm/error.hpp"
#include "gperm/flows.hpp"
#include "gperm/identities.hpp"
#include "gperm/invariant.hpp"
#include "gperm/permanent.hpp"

namespace py = pybind11;
using namespace gperm;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  return IntMatrix::from_rows(rows);
}

std::vector<std::vector<std::int64_t>> from_matrix(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out;
  for (int r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

// Python ints have no fixed width; going through text keeps all 128 bits.
py::object to_pyint(BigInt v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

Orientation orientation_or_natural(const Multigraph& g,
                                   const std::optional<std::vector<bool>>& o) {
  return o ? Orientation(*o) : Orientation::natural(g);
}

py::dict gp_dict(const GraphPermanent& gp) {
  py::dict d;
  d["k"] = gp.k;
  d["modulus"] = gp.modulus;
  d["gp"] = gp.canonical_residue;
  d["raw_residue"] = gp.raw_residue;
  return d;
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::object report(const IdentityReport& r) { return json_loads(report_to_json(r, -1)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graph permanents of k-duplicated signed incidence matrices";

  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<LimitError>(m, "LimitError", error.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", error.ptr());

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) {
               if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("vertex out of range");
               if (u == v) throw PreconditionError("loops are not allowed");
               es.push_back({u, v});
             }
             return Multigraph(n, std::move(es));
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_static(
          "parse",
          [](const std::string& text, const std::string& format) {
            const GraphFormat f = format == "auto" ? detect_format(text) : parse_format(format);
            return parse_graph(text, f);
          },
          py::arg("text"), py::arg("format") = "auto")
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("edge_count", &Multigraph::edge_count)
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degrees", &Multigraph::degrees)
      .def("is_connected", [](const Multigraph& g) { return is_connected(g); })
      .def("delete_vertex", [](const Multigraph& g, Vertex v) { return delete_vertex(g, v); })
      .def("to_graph6", [](const Multigraph& g) { return to_graph6(g); })
      .def("to_edgelist", [](const Multigraph& g) { return to_edgelist(g); })
      .def("canonical_form", [](const Multigraph& g) { return canonical_form(g); })
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "Multigraph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def("permanent", [](const std::vector<std::vector<std::int64_t>>& rows) {
    return to_pyint(permanent_exact(to_matrix(rows)));
  }, py::arg("matrix"), "Exact permanent (Ryser).");
  m.def("permanent_mod", [](const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p) {
    return permanent_mod(to_matrix(rows), p);
  }, py::arg("matrix"), py::arg("modulus"));

  m.def("detect_k", &detect_k, py::arg("graph"));
  m.def("kdsi_matrix",
        [](const Multigraph& g, std::optional<int> k, Vertex special,
           std::optional<std::vector<bool>> o) {
          return from_matrix(
              build_kdsi(g, orientation_or_natural(g, o), special, k ? *k : detect_k(g)).matrix);
        },
        py::arg("graph"), py::arg("k") = py::none(), py::arg("special") = 0,
        py::arg("orientation") = py::none());
  m.def("graph_permanent",
        [](const Multigraph& g, Vertex special, std::optional<std::vector<bool>> o) {
          return gp_dict(graph_permanent(g, orientation_or_natural(g, o), special));
        },
        py::arg("graph"), py::arg("special") = 0, py::arg("orientation") = py::none());
  m.def("tagging_permanent",
        [](const Multigraph& g, Vertex special, std::optional<std::vector<bool>> o) {
          return to_pyint(tagging_permanent(g, orientation_or_natural(g, o), special, detect_k(g)));
        },
        py::arg("graph"), py::arg("special") = 0, py::arg("orientation") = py::none());

  m.def("check_special_vertex", [](const Multigraph& g) { return report(check_special_vertex(g)); });
  m.def("check_decompletion", [](const Multigraph& g) { return report(check_decompletion(g)); });
  m.def("check_tag_oracle", [](const Multigraph& g) { return report(check_tag_oracle(g)); });
  m.def("check_orientation_identity",
        [](const Multigraph& g) { return report(check_orientation_identity(g)); });
  m.def("check_dual", [](const Multigraph& g, const std::string& rotation) {
    return report(check_dual(g, parse_rotation(rotation, g)));
  }, py::arg("graph"), py::arg("rotation"));
  m.def("check_two_vertex_cut", [](const Multigraph& g, Vertex v1, Vertex v2) {
    return report(check_two_vertex_cut(g, v1, v2));
  });
  m.def("check_four_edge_cut", [](const Multigraph& g, const std::vector<EdgeIndex>& cut) {
    return report(check_four_edge_cut(g, cut));
  });
  m.def("check_twist", [](const Multigraph& g, std::vector<Vertex> cut,
                          const std::vector<Vertex>& side) {
    if (cut.size() != 4) throw PreconditionError("a twist needs four cut vertices");
    return report(check_twist(g, TwistPairing{cut[0], cut[1], cut[2], cut[3]}, side));
  });

  m.def("find_modulo_orientation",
        [](const Multigraph& g, int k) -> std::optional<std::vector<bool>> {
          auto o = find_modulo_orientation(g, k);
          if (!o) return std::nullopt;
          return o->directions();
        },
        py::arg("graph"), py::arg("k"));
  m.def("certificate",
        [](const Multigraph& g, int p) -> py::object {
          const CertificateSearch s = alon_tarsi_certificate(g, p);
          if (!s.certificate) return py::none();
          return json_loads(certificate_to_json(*s.certificate, -1));
        },
        py::arg("graph"), py::arg("p"));

  m.def("generate_regular", &generate_regular, py::arg("n"), py::arg("degree") = 4,
        py::arg("seed") = 0);
  m.def("census",
        [](int order, const std::string& filter, int jobs) {
          const ExpectedTable table = load_expected_table(default_fixture_path());
          CensusReport r;
          {
            py::gil_scoped_release release;
            r = census_order(order, &table, jobs, parse_census_filter(filter));
          }
          const CensusSummary& s = r.summaries.front();
          py::dict d;
          d["order"] = s.order;
          d["graphs"] = s.graphs;
          d["primitive"] = s.primitive;
          d["irreducible"] = s.irreducible;
          d["counted"] = s.counted;
          d["residues"] = s.residues;
          d["pass"] = r.pass;
          d["summary"] = summary_line(s);
          return d;
        },
        py::arg("order"), py::arg("filter") = "irreducible", py::arg("jobs") = 0);
}
