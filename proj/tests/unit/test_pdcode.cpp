#include "doctest.h"

#include <algorithm>

#include "isoregion/errors.hpp"
#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"
#include "isoregion/torus.hpp"
#include "../support/oracles.hpp"

using namespace isoregion;

namespace {

const char* trefoil_pd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

oracle::Pd raw(const LinkProjection& L) { return L.crossings(); }

}  // namespace

TEST_CASE("parse accepts the trefoil and curl shadows") {
  const auto T = parse_pd(trefoil_pd);
  CHECK(T.crossing_count() == 3);
  CHECK(T.to_pd() == trefoil_pd);
  const auto C = parse_pd("X(1,1,2,2)");
  CHECK(C.crossing_count() == 1);
  CHECK(parse_pd("").is_trivial_circle());
  CHECK(parse_pd("  \n").is_trivial_circle());
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("Y(1,1,2,2)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,a,2,2)"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4) X(1,2,3,5)"), LabelError);
  CHECK_THROWS_AS(parse_pd("X(1,1,1,2)"), LabelError);
  CHECK_THROWS_AS(parse_pd("X(0,0,2,2)"), SyntaxError);
  CHECK_THROWS_AS(LinkProjection({{0, 0, 2, 2}}), LabelError);
}

TEST_CASE("labels are renumbered preserving order") {
  const auto L = parse_pd("X(10,10,30,30)");
  CHECK(L.to_pd() == "X(1,1,2,2)");
  CHECK_THROWS_AS(L.edge_darts(3), InvalidEdge);
  auto [a, b] = L.edge_darts(2);
  CHECK(a == Dart{0, 2});
  CHECK(b == Dart{0, 3});
}

TEST_CASE("validate agrees with the face-orbit oracle") {
  const auto T = parse_pd(trefoil_pd);
  const auto rep = validate(T);
  CHECK(rep.is_valid);
  CHECK(rep.crossing_count == 3);
  CHECK(rep.face_count == static_cast<int>(oracle::face_orbits(raw(T)).size()));
  CHECK(rep.face_count == 5);
  CHECK(rep.connected);
  CHECK(rep.reducible_crossings.empty());

  const auto C = parse_pd("X(1,1,2,2)");
  const auto rc = validate(C);
  CHECK(rc.is_valid);
  CHECK(rc.face_count == 3);
  CHECK(rc.reducible_crossings == std::vector<int>{0});
  CHECK(oracle::reducible(raw(C)) == std::vector<int>{0});
}

TEST_CASE("re-paired trefoil labels give a non-spherical rotation system") {
  // Same label multiset, different pairing at the last crossing.
  const oracle::Pd pd{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 3, 6, 2}};
  REQUIRE(oracle::face_orbits(pd).size() != 5);
  const LinkProjection L(pd);
  const auto rep = validate(L);
  CHECK_FALSE(rep.is_valid);
  REQUIRE_FALSE(rep.messages.empty());
  CHECK(rep.messages.front().find("non-spherical embedding") != std::string::npos);
  CHECK_THROWS_AS(regions(L), InvalidProjection);
}

TEST_CASE("region census matches the oracle") {
  const auto T = parse_pd(trefoil_pd);
  CHECK(gon_census(T) == GonCensus{{2, 3}, {3, 2}});
  CHECK(gon_census(T) == oracle::gon_counts(raw(T)));

  const auto C = parse_pd("X(1,1,2,2)");
  const auto gc = gon_census(C);
  CHECK(gc == oracle::gon_counts(raw(C)));
  CHECK(gc == GonCensus{{1, 2}, {2, 1}});
  int weighted = 0;
  for (auto [k, n] : gc) weighted += k * n;
  CHECK(weighted == 4);

  const auto T4 = torus_projection(4);
  CHECK(regions(T4).size() == 6);
  CHECK(gon_census(T4) == GonCensus{{2, 4}, {4, 2}});
}

TEST_CASE("regions list face orbits and their crossings") {
  const auto T = parse_pd(trefoil_pd);
  const auto rs = regions(T);
  REQUIRE(rs.size() == 5);
  for (const auto& r : rs.regions) {
    CHECK(static_cast<int>(r.boundary_crossings.size()) == r.gon());
    for (std::size_t i = 0; i < r.corners.size(); ++i) {
      CHECK(rs.region_of_dart[r.corners[i].index()] == r.id);
      CHECK(face_successor(T, r.corners[i]) == r.corners[(i + 1) % r.corners.size()]);
    }
  }
  const auto circle = regions(LinkProjection::trivial_circle());
  CHECK(circle.size() == 2);
}

TEST_CASE("AST identity") {
  CHECK(ast_identity_residual(parse_pd(trefoil_pd)) == 0);
  const auto T5 = torus_projection(5);
  CHECK(gon_census(T5) == GonCensus{{2, 5}, {5, 2}});
  CHECK(ast_identity_residual(T5) == 0);
  CHECK_THROWS_AS(ast_identity_residual(parse_pd("X(1,1,2,2)")), NotIrreducible);
  CHECK_THROWS_AS(ast_identity_residual(LinkProjection::trivial_circle()), TrivialProjection);
}

TEST_CASE("checkerboard colours adjacent faces differently") {
  for (const auto& L : {parse_pd(trefoil_pd), parse_pd("X(1,1,2,2)"), torus_projection(6)}) {
    const auto colors = checkerboard(L);
    const auto rs = regions(L);
    REQUIRE(static_cast<int>(colors.size()) == rs.size());
    for (int d = 0; d < L.dart_count(); ++d)
      CHECK(colors[rs.region_of_dart[d]] != colors[rs.region_of_dart[L.mates()[d]]]);
  }
}

TEST_CASE("connected sums") {
  const auto curl = parse_pd("X(1,1,2,2)");
  const auto cc = connected_sum(curl, 1, curl, 1);
  CHECK(cc.crossing_count() == 2);
  CHECK(validate(cc).is_valid);
  CHECK(validate(cc).face_count == 4);
  CHECK(reducible_crossings(cc) == std::vector<int>{0, 1});
  CHECK(oracle::reducible(raw(cc)) == std::vector<int>{0, 1});

  const auto T = parse_pd(trefoil_pd);
  for (SumMode mode : {SumMode::A, SumMode::B}) {
    const auto tt = connected_sum(T, 2, T, 5, mode);
    CHECK(tt.crossing_count() == 6);
    CHECK(validate(tt).is_valid);
    CHECK(isolate_number(region_graph(tt)) >= 2);
  }

  CHECK(connected_sum(T, 1, LinkProjection::trivial_circle(), 0) == T);
  CHECK(connected_sum(LinkProjection::trivial_circle(), 0, T, 3) == T);
  CHECK_THROWS_AS(connected_sum(T, 9, T, 1), InvalidEdge);
}

TEST_CASE("canonical form identifies relabelled and reflected copies") {
  const auto T = parse_pd(trefoil_pd);
  CHECK(isomorphic(T, torus_projection(3)));
  // Rotating the slots of every crossing and renaming labels keeps the class.
  const auto R = parse_pd("X(40,20,50,10) X(60,40,10,30) X(20,60,30,50)");
  CHECK(isomorphic(T, R));
  CHECK(canonical_code(T) == canonical_code(R));
  // Reversing every cyclic order is a reflection.
  oracle::Pd mirrored;
  for (auto x : T.crossings()) mirrored.push_back({x[3], x[2], x[1], x[0]});
  CHECK(isomorphic(T, LinkProjection(mirrored)));
  CHECK_FALSE(isomorphic(torus_projection(4), T));
  const auto canon = canonical_form(R);
  CHECK(canonical_form(canon) == canon);
  CHECK(isomorphic(canon, T));
}
