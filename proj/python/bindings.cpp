#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoregion/census.hpp"
#include "isoregion/errors.hpp"
#include "isoregion/json_io.hpp"
#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"
#include "isoregion/suite.hpp"
#include "isoregion/torus.hpp"
#include "isoregion/warping.hpp"

namespace py = pybind11;
using namespace isoregion;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default:
      return py::none();
  }
}

template <class T>
py::object as_dict(const T& value) {
  return to_python(Json(value));
}

std::vector<int> over_pairs_of(const OrientedDiagram& D) { return D.over_pairs(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Region invariants of link projections";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "SyntaxError", base);
  py::register_exception<LabelError>(m, "LabelError", base);
  py::register_exception<InvalidProjection>(m, "InvalidProjection", base);
  py::register_exception<NotIrreducible>(m, "NotIrreducible", base);
  py::register_exception<NotConnected>(m, "NotConnected", base);
  py::register_exception<InvalidEdge>(m, "InvalidEdge", base);
  py::register_exception<InvalidRegion>(m, "InvalidRegion", base);
  py::register_exception<TrivialProjection>(m, "TrivialProjection", base);
  py::register_exception<NotAKnot>(m, "NotAKnot", base);
  py::register_exception<SearchTooLarge>(m, "SearchTooLarge", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base);

  py::class_<LinkProjection>(m, "LinkProjection")
      .def(py::init([](const std::string& pd) { return parse_pd(pd); }), py::arg("pd") = "")
      .def(py::init<std::vector<std::array<int, 4>>>(), py::arg("crossings"))
      .def_property_readonly("crossing_count", &LinkProjection::crossing_count)
      .def_property_readonly("crossings", &LinkProjection::crossings)
      .def_property_readonly("is_trivial_circle", &LinkProjection::is_trivial_circle)
      .def("to_pd", &LinkProjection::to_pd)
      .def("__eq__", [](const LinkProjection& a, const LinkProjection& b) { return a == b; })
      .def("__repr__", [](const LinkProjection& L) {
        return "LinkProjection('" + L.to_pd() + "')";
      });

  m.def("parse_pd", &parse_pd, py::arg("text"));
  m.def("validate", [](const LinkProjection& L) { return as_dict(validate(L)); });
  m.def("regions", [](const LinkProjection& L) { return to_python(regions_json(L, regions(L))); });
  m.def("gon_census", &gon_census);
  m.def("count_faces", &count_faces);
  m.def("strand_count", &strand_count);
  m.def("reducible_crossings", &reducible_crossings);
  m.def("is_irreducible", &is_irreducible);
  m.def("ast_identity_residual", &ast_identity_residual);
  m.def("connected_sum",
        [](const LinkProjection& a, int ea, const LinkProjection& b, int eb, const std::string& mode) {
          if (mode != "A" && mode != "B") throw RangeError("mode must be 'A' or 'B'");
          return connected_sum(a, ea, b, eb, mode == "A" ? SumMode::A : SumMode::B);
        },
        py::arg("a"), py::arg("edge_a"), py::arg("b"), py::arg("edge_b"), py::arg("mode") = "A");
  m.def("canonical_form", &canonical_form, py::arg("projection"), py::arg("allow_reflection") = true);
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"), py::arg("allow_reflection") = true);

  py::class_<RegionGraph>(m, "RegionGraph")
      .def_property_readonly("vertex_count", &RegionGraph::vertex_count)
      .def_property_readonly("labels", &RegionGraph::labels)
      .def("edges", &RegionGraph::edges)
      .def("adjacent", &RegionGraph::adjacent)
      .def("degree", &RegionGraph::degree);

  m.def("region_graph", &region_graph);
  m.def("graph_from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > RegionGraph::max_vertices) throw RangeError("graphs hold at most 64 vertices");
    RegionGraph G(n);
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw RangeError("edge endpoint out of range");
      G.add_edge(a, b);
    }
    return G;
  }, py::arg("n"), py::arg("edges"));
  m.def("complement", &complement);
  m.def("isolate_number", py::overload_cast<const RegionGraph&>(&isolate_number));
  m.def("maximum_isolated_set", &maximum_isolated_set);
  m.def("independent_region_number", &independent_region_number);
  m.def("igen_polynomial", [](const RegionGraph& G) { return igen_polynomial(G).coeffs; });
  m.def("list_isolated_sets", &list_isolated_sets, py::arg("graph"), py::arg("k") = py::none());
  m.def("split_sum_graph", &split_sum_graph);
  m.def("a2_bounds", [](const LinkProjection& L) { return as_dict(a2_bounds_check(L)); });

  m.def("torus_projection", &torus_projection);
  m.def("torus_igen_closed_form", [](int n) { return torus_igen_closed_form(n).coeffs; });
  m.def("torus_igen_enumerated", [](int n) { return torus_igen_enumerated(n).coeffs; });
  m.def("nonadjacent_count", &nonadjacent_count);
  m.def("recurrence_check", [](int n) {
    auto r = recurrence_check(n);
    py::dict out;
    out["residual"] = r.residual;
    out["ok"] = r.ok;
    return out;
  });
  m.def("fn_at_one", &fn_at_one);

  py::class_<OrientedDiagram>(m, "OrientedDiagram")
      .def_property_readonly("shadow", &OrientedDiagram::shadow)
      .def_property_readonly("over_pairs", &over_pairs_of)
      .def_property_readonly("crossing_count", &OrientedDiagram::crossing_count)
      .def("edge_order", &OrientedDiagram::edge_order)
      .def("reversed", &OrientedDiagram::reversed)
      .def("mirrored", &OrientedDiagram::mirrored)
      .def("with_crossing_changed", &OrientedDiagram::with_crossing_changed);

  m.def("make_diagram",
        [](const LinkProjection& shadow, std::vector<int> pairs, std::optional<std::vector<int>> edge_order,
           bool backward) {
          if (edge_order) return make_diagram(shadow, std::move(pairs), *edge_order);
          return make_diagram(shadow, std::move(pairs), backward ? Direction::backward : Direction::forward);
        },
        py::arg("shadow"), py::arg("over_pairs"), py::arg("edge_order") = py::none(), py::arg("backward") = false);
  m.def("parse_diagram", &parse_diagram, py::arg("pd"), py::arg("edge_order") = py::none());
  m.def("alternating_diagram", &alternating_diagram);
  m.def("warping_labeling", [](const OrientedDiagram& D) { return as_dict(warping_labeling(D)); });
  m.def("warping_stats", [](const OrientedDiagram& D) { return as_dict(warping_stats(D)); });
  m.def("is_alternating", &is_alternating);
  m.def("is_almost_alternating", &is_almost_alternating);
  m.def("has_monogon", &has_monogon);
  m.def("projection_warping_degree", &projection_warping_degree);
  m.def("welded_bounds", [](const OrientedDiagram& D) { return as_dict(welded_bounds(D)); });
  m.def("wd_exception_search", &wd_exception_search);

  m.def("enumerate_projections",
        [](int max_crossings, bool dedup, bool knots_only, bool extended, bool identify_reflections) {
          CensusConfig cfg;
          cfg.max_crossings = max_crossings;
          cfg.dedup = dedup;
          cfg.knots_only = knots_only;
          cfg.extended = extended;
          cfg.identify_reflections = identify_reflections;
          return enumerate_projections(cfg);
        },
        py::arg("max_crossings") = 4, py::arg("dedup") = false, py::arg("knots_only") = false,
        py::arg("extended") = false, py::arg("identify_reflections") = true);
  m.def("census_record", [](const LinkProjection& L) { return as_dict(census_record(L)); });
  m.def("verify_paper_suite",
        [](int max_c, bool extended, int torus_max) {
          SuiteOptions opt;
          opt.max_c = max_c;
          opt.extended = extended;
          opt.torus_max = torus_max;
          const auto report = verify_paper_suite(opt);
          py::dict out;
          out["ok"] = report.ok();
          out["failed"] = report.failed_count();
          out["checks"] = to_python(Json(report.checks));
          return out;
        },
        py::arg("max_c") = 4, py::arg("extended") = false, py::arg("torus_max") = 24);
}
