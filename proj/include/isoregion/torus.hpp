#pragma once

#include <cstdint>
#include <vector>

#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"

namespace isoregion {

// Standard projection of the (2,n)-torus link: n crossings around an annulus,
// n bigons and two n-gons. n = 1 is the one-crossing curl. Throws RangeError for n < 1.
LinkProjection torus_projection(int n);

// Coefficients 1, n+2, then C(n-k, k) * n / (n-k) for 2 <= k <= floor(n/2).
IGenPolynomial torus_igen_closed_form(int n);

// Same polynomial obtained by enumerating isolated sets of the constructed projection.
IGenPolynomial torus_igen_enumerated(int n);

std::int64_t binomial(std::int64_t n, std::int64_t k);

// Ways to choose n of m balls in a line with no two chosen balls adjacent.
std::int64_t nonadjacent_count(std::int64_t m, std::int64_t n);

struct RecurrenceCheck {
  std::vector<std::int64_t> residual;  // f_n - f_{n-1} - x f_{n-2}, trailing zeros trimmed
  bool ok = false;                      // residual == -2x^2
};

// Uses the enumerated polynomials. Throws RangeError for n < 4.
RecurrenceCheck recurrence_check(int n);
std::int64_t fn_at_one(int n);

}  // namespace isoregion
