#include "doctest.h"

#include "isoregion/errors.hpp"
#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"
#include "isoregion/torus.hpp"
#include "../support/oracles.hpp"

using namespace isoregion;

using Coeffs = std::vector<std::int64_t>;

TEST_CASE("torus projections") {
  CHECK(torus_projection(1) == parse_pd("X(1,1,2,2)"));
  CHECK(isomorphic(torus_projection(3), parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")));
  CHECK(gon_census(torus_projection(3)) == GonCensus{{2, 3}, {3, 2}});
  for (int n = 2; n <= 9; ++n) {
    const auto L = torus_projection(n);
    CHECK(validate(L).is_valid);
    CHECK(is_irreducible(L));
    CHECK(strand_count(L) == (n % 2 == 0 ? 2 : 1));
    CHECK(oracle::gon_counts(L.crossings()) == (n == 2 ? GonCensus{{2, 4}} : GonCensus{{2, n}, {n, 2}}));
  }
  CHECK_THROWS_AS(torus_projection(0), RangeError);
}

TEST_CASE("closed form") {
  CHECK(torus_igen_closed_form(9).coeffs == Coeffs{1, 11, 27, 30, 9});
  CHECK(torus_igen_closed_form(12).coeffs == Coeffs{1, 14, 54, 112, 105, 36, 2});
  CHECK(torus_igen_closed_form(2).coeffs == Coeffs{1, 4});
  CHECK(torus_igen_closed_form(1).coeffs == Coeffs{1, 3});
  for (int n = 1; n <= 14; ++n) CHECK(torus_igen_closed_form(n) == torus_igen_enumerated(n));
}

TEST_CASE("nonadjacent counts") {
  CHECK(nonadjacent_count(5, 2) == 6);
  for (int m = 0; m <= 9; ++m) CHECK(nonadjacent_count(m, 0) == 1);
  CHECK(nonadjacent_count(4, 3) == 0);
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) CHECK(nonadjacent_count(m, k) == oracle::nonadjacent_brute(m, k));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("recurrence") {
  const auto r6 = recurrence_check(6);
  CHECK(r6.ok);
  CHECK(r6.residual == Coeffs{0, 0, -2});
  CHECK(recurrence_check(4).ok);
  CHECK(fn_at_one(5) == 13);
  CHECK(fn_at_one(4) == 9);
  CHECK(fn_at_one(3) == 6);
  CHECK(fn_at_one(5) == fn_at_one(4) + fn_at_one(3) - 2);
  CHECK_THROWS_AS(recurrence_check(3), RangeError);
}
