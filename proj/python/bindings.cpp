// Python bindings. Big integers cross as Python int, rationals as
// fractions.Fraction, tuples as lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "girthforge/algebraic_graphs.hpp"
#include "girthforge/formats.hpp"
#include "girthforge/realization.hpp"
#include "girthforge/svg.hpp"
#include "girthforge/truncated.hpp"
#include "girthforge/verification.hpp"

namespace py = pybind11;
using namespace girthforge;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }

py::object to_py(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(x.get_num()), to_py(x.get_den()));
}

py::list to_py(const IntTuple& t) {
  py::list out;
  for (const auto& x : t) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<IntTuple>& ts) {
  py::list out;
  for (const auto& t : ts) out.append(to_py(t));
  return out;
}

IntTuple tuple_from_py(const py::sequence& s) {
  IntTuple out;
  for (const auto& x : s) out.push_back(from_py(x.cast<py::int_>()));
  return out;
}

py::dict side_stats(const SideDegreeStats& s) {
  py::dict d;
  d["min"] = s.min;
  d["max"] = s.max;
  d["histogram"] = s.histogram;
  return d;
}

PrimeMode parse_mode(const std::string& s) {
  if (s == "minimal") return PrimeMode::Minimal;
  if (s == "paper") return PrimeMode::Window;
  throw Error("prime mode must be 'minimal' or 'paper'");
}

}  // namespace

PYBIND11_MODULE(_girthforge, m) {
  auto error = py::register_exception<Error>(m, "GirthforgeError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<ProjectionFailed>(m, "ProjectionFailed", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init([](std::size_t left, std::size_t right, const std::vector<Edge>& edges) {
             return BipartiteGraph(left, right, edges);
           }),
           py::arg("left"), py::arg("right"), py::arg("edges"))
      .def_property_readonly("left_count", &BipartiteGraph::left_count)
      .def_property_readonly("right_count", &BipartiteGraph::right_count)
      .def_property_readonly("vertex_count", &BipartiteGraph::vertex_count)
      .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
      .def("edges", &BipartiteGraph::edges)
      .def("neighbors", [](const BipartiteGraph& g, VertexId v) {
        if (v >= g.vertex_count()) throw py::index_error("vertex out of range");
        auto n = g.neighbors(v);
        return std::vector<VertexId>(n.begin(), n.end());
      })
      .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<BipartiteGraph " + std::to_string(g.left_count()) + "+" + std::to_string(g.right_count()) +
               " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("lu_graph", [](int k, std::int64_t q) { return build_lu_graph({k, q}); }, py::arg("k"), py::arg("q"));
  m.def("wenger_graph", [](int k, std::int64_t p) { return build_wenger_graph({k, p}); }, py::arg("k"),
        py::arg("p"));

  m.def("girth", [](const BipartiteGraph& g) {
    const auto r = girth(g);
    return py::make_tuple(r.girth ? py::object(py::int_(*r.girth)) : py::none(), r.witness);
  });
  m.def("has_cycle_of_length", &has_cycle_of_length, py::arg("graph"), py::arg("length"));
  m.def("is_valid_cycle", &is_valid_cycle);
  m.def("degree_stats", [](const BipartiteGraph& g) {
    const auto s = degree_stats(g);
    py::dict d;
    d["left"] = side_stats(s.left);
    d["right"] = side_stats(s.right);
    return d;
  });
  m.def("graphs_identical", &graphs_identical);
  m.def("st_ratio", [](const py::int_& p, const py::int_& l, const py::int_& i) {
    return to_py(st_ratio(from_py(p), from_py(l), from_py(i)));
  });
  m.def("theoretical_exponent",
        [](const std::string& family, int k) { return to_py(theoretical_exponent(parse_family(family), k)); });
  m.def("girth_target", &girth_target);

  m.def("is_prime", [](const py::int_& n) { return is_prime(from_py(n)); });
  m.def("next_prime", [](const py::int_& n) { return to_py(next_prime(from_py(n))); });
  m.def("int_nth_root", [](const py::int_& x, unsigned n) { return to_py(int_nth_root(from_py(x), n)); });

  py::class_<TruncatedArrangement>(m, "TruncatedArrangement")
      .def_property_readonly("family",
                             [](const TruncatedArrangement& a) { return std::string(family_name(a.spec.family)); })
      .def_property_readonly("k", [](const TruncatedArrangement& a) { return a.spec.k; })
      .def_property_readonly("n", [](const TruncatedArrangement& a) { return to_py(a.spec.n); })
      .def_property_readonly("points", [](const TruncatedArrangement& a) { return to_py(a.points); })
      .def_property_readonly("line_params", [](const TruncatedArrangement& a) { return to_py(a.line_params); })
      .def_readonly("edges", &TruncatedArrangement::edges)
      .def_readonly("warnings", &TruncatedArrangement::warnings)
      .def("graph", &TruncatedArrangement::graph)
      .def("render", [](const TruncatedArrangement& a, bool incidences) { return render_arrangement(to_file(a, incidences)); },
           py::arg("incidences") = true);

  m.def(
      "build_truncated",
      [](const std::string& family, int k, const py::int_& n, std::uint64_t budget) {
        BuildOptions opts;
        opts.budget = budget;
        return build_truncated({parse_family(family), k, from_py(n)}, opts);
      },
      py::arg("family"), py::arg("k"), py::arg("n"), py::arg("budget") = BuildOptions{}.budget);
  m.def(
      "embedding_prime",
      [](const TruncatedArrangement& a, const std::string& mode) { return to_py(embedding_prime(a, parse_mode(mode))); },
      py::arg("arrangement"), py::arg("mode") = "minimal");
  m.def("verify_subgraph_embedding",
        [](const TruncatedArrangement& a, const py::int_& q) { return verify_subgraph_embedding(a, from_py(q)); });

  py::class_<AffineLineKD>(m, "AffineLine")
      .def_property_readonly("dim", &AffineLineKD::dim)
      .def_property_readonly("base",
                             [](const AffineLineKD& l) {
                               py::list out;
                               for (const auto& x : l.base()) out.append(to_py(x));
                               return out;
                             })
      .def_property_readonly("dir", [](const AffineLineKD& l) { return to_py(l.dir()); })
      .def("contains", [](const AffineLineKD& l, const py::sequence& p) { return point_on_line(tuple_from_py(p), l); });

  m.def("realize_lines", &realize_lines);
  m.def("lines_distinct", [](const std::vector<AffineLineKD>& lines) {
    const auto cert = certify_lines_distinct(lines);
    return py::make_tuple(cert.distinct, cert.collision ? py::cast(*cert.collision) : py::none());
  });
  m.def("incidences", [](const TruncatedArrangement& a, const std::vector<AffineLineKD>& lines) {
    return incidence_set_kd_hashed(a.points, lines);
  });

  py::class_<PlanarArrangement>(m, "PlanarArrangement")
      .def_property_readonly("points",
                             [](const PlanarArrangement& a) {
                               py::list out;
                               for (const auto& p : a.points) out.append(py::make_tuple(to_py(p.x), to_py(p.y)));
                               return out;
                             })
      .def_property_readonly("lines",
                             [](const PlanarArrangement& a) {
                               py::list out;
                               for (const auto& l : a.lines) out.append(py::make_tuple(to_py(l.a), to_py(l.b), to_py(l.c)));
                               return out;
                             })
      .def_readonly("incidences", &PlanarArrangement::incidences)
      .def("graph", &PlanarArrangement::graph)
      .def("render", [](const PlanarArrangement& a) { return render_planar(a); })
      .def("svg", [](const PlanarArrangement& a) { return export_svg(a); });

  m.def(
      "project",
      [](const TruncatedArrangement& a, std::uint64_t seed, std::uint64_t bound, int retries) {
        auto r = project_generic(a.points, realize_lines(a), seed, bound, retries);
        py::dict d;
        d["planar"] = std::move(r.planar);
        d["seed"] = r.map.seed;
        d["row_x"] = to_py(r.map.row_x);
        d["row_y"] = to_py(r.map.row_y);
        d["attempts"] = r.attempts;
        return d;
      },
      py::arg("arrangement"), py::arg("seed") = 1, py::arg("bound") = 65536, py::arg("retries") = 8);
}
