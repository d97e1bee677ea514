#include "isoregion/torus.hpp"

#include <algorithm>

#include "isoregion/errors.hpp"

namespace isoregion {

LinkProjection torus_projection(int n) {
  if (n < 1) throw RangeError("torus projection needs n >= 1");
  // Band edges between crossing i and i+1: top t_i = 2i+1, bottom b_i = 2i+2.
  // Counterclockwise around crossing i: t_i, t_{i-1}, b_{i-1}, b_i.
  auto top = [n](int i) { return 2 * (((i % n) + n) % n) + 1; };
  auto bottom = [n](int i) { return 2 * (((i % n) + n) % n) + 2; };
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(n);
  for (int i = 0; i < n; ++i) crossings.push_back({top(i), top(i - 1), bottom(i - 1), bottom(i)});
  return LinkProjection(std::move(crossings));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IGenPolynomial torus_igen_closed_form(int n) {
  if (n < 1) throw RangeError("torus polynomial needs n >= 1");
  IGenPolynomial f{{1, n + 2}};
  for (int k = 2; k <= n / 2; ++k) {
    // C(n-k, k) * n is always divisible by n-k.
    f.coeffs.push_back(binomial(n - k, k) * n / (n - k));
  }
  return f;
}

IGenPolynomial torus_igen_enumerated(int n) { return igen_polynomial(region_graph(torus_projection(n))); }

std::int64_t nonadjacent_count(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw RangeError("nonadjacent_count needs m, n >= 0");
  return binomial(m - n + 1, n);
}

RecurrenceCheck recurrence_check(int n) {
  if (n < 4) throw RangeError("the recurrence holds for n >= 4");
  const auto fn = torus_igen_enumerated(n).coeffs;
  const auto f1 = torus_igen_enumerated(n - 1).coeffs;
  const auto f2 = torus_igen_enumerated(n - 2).coeffs;
  std::vector<std::int64_t> r(std::max({fn.size(), f1.size(), f2.size() + 1}), 0);
  for (std::size_t k = 0; k < fn.size(); ++k) r[k] += fn[k];
  for (std::size_t k = 0; k < f1.size(); ++k) r[k] -= f1[k];
  for (std::size_t k = 0; k < f2.size(); ++k) r[k + 1] -= f2[k];
  while (!r.empty() && r.back() == 0) r.pop_back();
  RecurrenceCheck out;
  out.ok = r == std::vector<std::int64_t>{0, 0, -2};
  out.residual = std::move(r);
  return out;
}

std::int64_t fn_at_one(int n) { return torus_igen_enumerated(n).at_one(); }

}  // namespace isoregion
