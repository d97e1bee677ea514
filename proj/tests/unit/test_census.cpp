#include "doctest.h"

#include <set>

#include "isoregion/census.hpp"
#include "isoregion/errors.hpp"
#include "isoregion/torus.hpp"
#include "../support/oracles.hpp"

using namespace isoregion;

namespace {

// Canonical classes of every spherical connected matching of 4c darts.
std::set<std::vector<int>> brute_force_classes(int c) {
  std::set<std::vector<int>> out;
  std::vector<int> m(4 * c, -1);
  oracle::all_matchings(m, [&](const std::vector<int>& mates) {
    const auto L = LinkProjection::from_mates(mates);
    if (!is_connected(L)) return;
    if (static_cast<int>(oracle::face_orbits(L.crossings()).size()) != c + 2) return;
    out.insert(canonical_code(L));
  });
  return out;
}

std::set<std::vector<int>> census_classes(int c) {
  std::set<std::vector<int>> out;
  for_each_rotation_system(c, [&](const LinkProjection& L) { out.insert(canonical_code(L)); });
  return out;
}

std::vector<LinkProjection> census(int max_c, bool dedup, bool knots_only = false) {
  CensusConfig cfg;
  cfg.max_crossings = max_c;
  cfg.dedup = dedup;
  cfg.knots_only = knots_only;
  return enumerate_projections(cfg);
}

}  // namespace

TEST_CASE("search covers every class found by brute-force matching") {
  for (int c = 1; c <= 3; ++c) CHECK(census_classes(c) == brute_force_classes(c));
  CHECK(brute_force_classes(1).size() == 1);
}

TEST_CASE("census contents") {
  const auto all = census(4, true);
  CHECK(all.front().is_trivial_circle());
  std::map<int, int> per_c;
  std::set<std::vector<int>> codes;
  for (const auto& L : all) {
    ++per_c[L.crossing_count()];
    CHECK(validate(L).is_valid);
    CHECK(codes.insert(canonical_code(L)).second);
  }
  CHECK(per_c[1] == 1);
  for (const auto& L : census(2, false))
    if (L.crossing_count() == 2) CHECK(count_faces(L) == 4);

  const auto witnesses = {torus_projection(1), torus_projection(2), torus_projection(3), torus_projection(4),
                          parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")};
  for (const auto& w : witnesses) CHECK(codes.contains(canonical_code(w)));

  const auto knots = census(3, true, true);
  bool trefoil = false;
  for (const auto& L : knots) {
    CHECK(strand_count(L) == 1);
    trefoil = trefoil || (is_irreducible(L) && isomorphic(L, torus_projection(3)));
  }
  CHECK(trefoil);
}

TEST_CASE("census is deterministic and bounded") {
  const auto a = census(4, true);
  const auto b = census(4, true);
  CHECK(a == b);
  CensusConfig big;
  big.max_crossings = 5;
  CHECK_THROWS_AS(enumerate_projections(big), LimitExceeded);
  big.max_crossings = 6;
  big.extended = true;
  CHECK_THROWS_AS(enumerate_projections(big), LimitExceeded);
}

TEST_CASE("reflections can be kept apart") {
  CensusConfig cfg;
  cfg.max_crossings = 4;
  cfg.dedup = true;
  const auto identified = enumerate_projections(cfg).size();
  cfg.identify_reflections = false;
  CHECK(enumerate_projections(cfg).size() >= identified);
}

TEST_CASE("isolate number one classification") {
  const auto rep = verify_isolate_one_classification(4);
  CHECK(rep.ok);
  CHECK(rep.isolate_one.size() == 4);
  CHECK(rep.missing.empty());
  CHECK(rep.unexpected.empty());
  CHECK(rep.four_plus_checked > 0);
  CHECK(rep.four_plus_violations == 0);
  CHECK(rep.reducible_violations == 0);
}

TEST_CASE("census records") {
  const auto t = census_record(torus_projection(3));
  CHECK(t.isolate == 1);
  CHECK(t.independent_region == 1);
  CHECK(t.igen.coeffs == std::vector<std::int64_t>{1, 5});
  CHECK(t.failed.empty());
  const auto curl = census_record(torus_projection(1));
  CHECK(curl.isolate == 1);
  CHECK(curl.igen.coeffs == std::vector<std::int64_t>{1, 3});
  const auto circle = census_record(LinkProjection::trivial_circle());
  CHECK_FALSE(circle.independent_region.has_value());
  CHECK(circle.failed.empty());
}

TEST_CASE("property suite over the c<=4 census") {
  const auto report = corpus_property_suite(4);
  CHECK(report.failed_count() == 0);
  for (const char* name : {"ast_identity", "ngon_neighbors", "small_face_pair", "a2_bounds", "region_chain",
                           "span_alternating", "igen_shape"}) {
    CHECK_MESSAGE(report.checks.contains(name), name);
    if (report.checks.contains(name)) CHECK(report.checks.at(name).passed > 0);
  }
}
