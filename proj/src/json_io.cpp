#include "isoregion/json_io.hpp"

namespace isoregion {

void to_json(Json& j, const Dart& d) { j = Json::array({d.crossing, d.slot}); }

Json gon_census_json(const GonCensus& census) {
  Json j = Json::object();
  for (auto [k, count] : census) j[std::to_string(k)] = count;
  return j;
}

Json regions_json(const LinkProjection& L, const RegionSet& rs) {
  Json list = Json::array();
  GonCensus census;
  for (const auto& r : rs.regions) {
    list.push_back({{"id", r.id}, {"gon", r.gon()}, {"darts", r.corners}, {"crossings", r.boundary_crossings}});
    ++census[r.gon()];
  }
  return {{"pd", L.to_pd()},
          {"crossings", L.crossing_count()},
          {"regions", list},
          {"gon_census", gon_census_json(census)}};
}

void to_json(Json& j, const ValidationReport& r) {
  j = {{"is_valid", r.is_valid},
       {"crossing_count", r.crossing_count},
       {"face_count", r.face_count},
       {"connected", r.connected},
       {"reducible_crossings", r.reducible_crossings},
       {"messages", r.messages}};
}

void to_json(Json& j, const RegionGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = {{"vertex_count", g.vertex_count()}, {"labels", g.labels()}, {"edges", edges}};
}

void to_json(Json& j, const IGenPolynomial& f) { j = {{"coeffs", f.coeffs}}; }

void to_json(Json& j, const WarpingLabeling& w) {
  Json by_edge = Json::object();
  for (auto [edge, value] : w.by_edge) by_edge[std::to_string(edge)] = value;
  j = {{"along_walk", w.along_walk}, {"by_edge", by_edge}};
}

void to_json(Json& j, const WarpingStats& s) {
  j = {{"d", s.d}, {"d_rev", s.d_rev}, {"d_bar", s.d_bar}, {"span", s.span}, {"max_label", s.max_label}, {"c", s.c}};
}

void to_json(Json& j, const WeldedBounds& b) {
  j = {{"bound_dbar", b.bound_dbar},
       {"bound_c_minus_i", b.c_minus_i_applicable() ? Json(b.bound_c_minus_i) : Json(nullptr)},
       {"applicable",
        {{"almost_alternating", b.almost_alternating}, {"small_irreducible", b.small_irreducible_no_exception}}},
       {"headline", b.headline}};
}

void to_json(Json& j, const A2Bounds& b) {
  j = {{"a2", b.a2}, {"lower", b.lower}, {"upper", b.upper}, {"ok", b.ok}};
}

void to_json(Json& j, const CensusRecord& r) {
  j = {{"pd", r.pd},
       {"c", r.c},
       {"strands", r.strands},
       {"connected", r.connected},
       {"irreducible", r.irreducible},
       {"I", r.isolate},
       {"IR", r.independent_region ? Json(*r.independent_region) : Json(nullptr)},
       {"igen", r.igen.coeffs},
       {"gon_census", gon_census_json(r.gons)},
       {"checks_passed", r.passed},
       {"checks_failed", r.failed}};
}

void to_json(Json& j, const CheckResult& r) {
  j = {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace isoregion
