#include "isoregion/warping.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "isoregion/errors.hpp"
#include "isoregion/regiongraph.hpp"

namespace isoregion {

namespace {

std::vector<Dart> trace_walk(const LinkProjection& L, Dart first_exit) {
  std::vector<Dart> walk;
  Dart d = first_exit;
  do {
    walk.push_back(d);
    d = opposite(L.mate(d));
  } while (d != first_exit);
  return walk;
}

}  // namespace

OrientedDiagram::OrientedDiagram(LinkProjection shadow, std::vector<int> over_pairs, Dart first_exit)
    : shadow_(std::move(shadow)), over_pairs_(std::move(over_pairs)) {
  if (shadow_.is_trivial_circle()) throw TrivialProjection("diagram needs at least one crossing");
  if (!validate(shadow_).is_valid) throw InvalidProjection("diagram shadow is not a valid projection");
  if (static_cast<int>(over_pairs_.size()) != shadow_.crossing_count())
    throw RangeError("one over pair per crossing required");
  for (int p : over_pairs_)
    if (p != 0 && p != 1) throw RangeError("over pair must be 0 or 1");
  if (first_exit.crossing < 0 || first_exit.crossing >= crossing_count() || first_exit.slot < 0 ||
      first_exit.slot > 3)
    throw RangeError("start dart out of range");
  walk_ = trace_walk(shadow_, first_exit);
  if (static_cast<int>(walk_.size()) != shadow_.edge_count()) {
    throw NotAKnot("shadow has " + std::to_string(strand_count(shadow_)) + " strands");
  }
}

std::vector<int> OrientedDiagram::edge_order() const {
  std::vector<int> out;
  out.reserve(walk_.size());
  for (Dart d : walk_) out.push_back(shadow_.label(d));
  return out;
}

bool OrientedDiagram::passes_over(int k) const {
  Dart entry = shadow_.mate(walk_[k]);
  return over_pairs_[entry.crossing] == entry.slot % 2;
}

OrientedDiagram OrientedDiagram::reversed() const {
  return OrientedDiagram(shadow_, over_pairs_, shadow_.mate(walk_.front()));
}

OrientedDiagram OrientedDiagram::mirrored() const {
  std::vector<int> flipped(over_pairs_);
  for (int& p : flipped) p ^= 1;
  return OrientedDiagram(shadow_, std::move(flipped), walk_.front());
}

OrientedDiagram OrientedDiagram::with_crossing_changed(int crossing) const {
  std::vector<int> changed(over_pairs_);
  changed.at(crossing) ^= 1;
  return OrientedDiagram(shadow_, std::move(changed), walk_.front());
}

OrientedDiagram make_diagram(const LinkProjection& shadow, std::vector<int> over_pairs, Direction direction) {
  OrientedDiagram forward(shadow, std::move(over_pairs), Dart{0, 0});
  return direction == Direction::forward ? forward : forward.reversed();
}

OrientedDiagram make_diagram(const LinkProjection& shadow, std::vector<int> over_pairs,
                             const std::vector<int>& edge_order) {
  if (edge_order.empty()) throw InvalidEdge("edge order is empty");
  auto [a, b] = shadow.edge_darts(edge_order.front());
  for (Dart start : {a, b}) {
    OrientedDiagram D(shadow, over_pairs, start);
    if (D.edge_order() == edge_order) return D;
  }
  throw InvalidEdge("edge order is not a traversal of the strand");
}

OrientedDiagram parse_diagram(std::string_view pd, const std::optional<std::vector<int>>& edge_order) {
  LinkProjection shadow = parse_pd(pd);
  // Slot 0 carries the incoming under strand, so the over strand uses pair {1, 3}.
  std::vector<int> over_pairs(shadow.crossing_count(), 1);
  if (edge_order) return make_diagram(shadow, std::move(over_pairs), *edge_order);
  if (shadow.is_trivial_circle()) throw TrivialProjection("diagram needs at least one crossing");
  return OrientedDiagram(std::move(shadow), std::move(over_pairs), Dart{0, 2});
}

WarpingLabeling warping_labeling(const OrientedDiagram& D) {
  const int steps = static_cast<int>(D.walk().size());
  WarpingLabeling out;
  out.along_walk.resize(steps);
  std::vector<char> met(D.crossing_count());
  for (int base = 0; base < steps; ++base) {
    std::fill(met.begin(), met.end(), 0);
    int warping = 0;
    for (int j = 0; j < steps; ++j) {
      const int k = (base + j) % steps;
      const int v = D.shadow().mate(D.walk()[k]).crossing;
      if (met[v]) continue;
      met[v] = 1;
      if (!D.passes_over(k)) ++warping;
    }
    out.along_walk[base] = warping;
    out.by_edge[D.shadow().label(D.walk()[base])] = warping;
  }
  return out;
}

WarpingStats warping_stats(const OrientedDiagram& D) {
  const auto labels = warping_labeling(D).along_walk;
  auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  WarpingStats s;
  s.c = D.crossing_count();
  s.d = *lo;
  s.max_label = *hi;
  s.d_rev = s.c - s.max_label;
  s.d_bar = std::min(s.d, s.d_rev);
  s.span = s.max_label - s.d;
  return s;
}

bool is_alternating(const OrientedDiagram& D) {
  const int steps = static_cast<int>(D.walk().size());
  for (int k = 0; k < steps; ++k)
    if (D.passes_over(k) == D.passes_over((k + 1) % steps)) return false;
  return true;
}

bool is_almost_alternating(const OrientedDiagram& D) {
  if (is_alternating(D)) return false;
  for (int v = 0; v < D.crossing_count(); ++v)
    if (is_alternating(D.with_crossing_changed(v))) return true;
  return false;
}

bool has_monogon(const OrientedDiagram& D) {
  const auto rs = regions(D.shadow());
  return std::any_of(rs.regions.begin(), rs.regions.end(), [](const Region& r) { return r.gon() == 1; });
}

OrientedDiagram alternating_diagram(const LinkProjection& shadow) {
  if (shadow.is_trivial_circle()) throw TrivialProjection("diagram needs at least one crossing");
  OrientedDiagram base(shadow, std::vector<int>(shadow.crossing_count(), 0), Dart{0, 0});
  std::vector<int> pairs(shadow.crossing_count(), -1);
  for (int k = 0; k < static_cast<int>(base.walk().size()); ++k) {
    Dart entry = shadow.mate(base.walk()[k]);
    const int wanted = (k % 2 == 0) ? entry.slot % 2 : (entry.slot + 1) % 2;
    int& p = pairs[entry.crossing];
    if (p >= 0 && p != wanted) throw InvalidProjection("shadow admits no alternating diagram");
    p = wanted;
  }
  return OrientedDiagram(shadow, std::move(pairs), Dart{0, 0});
}

int projection_warping_degree(const LinkProjection& shadow) {
  return warping_stats(alternating_diagram(shadow)).d_bar;
}

WeldedBounds welded_bounds(const OrientedDiagram& D) {
  WeldedBounds out;
  const int c = D.crossing_count();
  out.bound_dbar = warping_stats(D).d_bar;
  out.bound_c_minus_i = c - isolate_number(region_graph(D.shadow()));
  out.almost_alternating = is_almost_alternating(D);
  if (c <= 9 && is_irreducible(D.shadow())) out.small_irreducible_no_exception = !wd_exception_search(D.shadow());
  out.headline = out.bound_dbar;
  if (out.c_minus_i_applicable()) out.headline = std::min(out.headline, out.bound_c_minus_i);
  return out;
}

int max_search_crossings() {
  constexpr int fallback = 12;
  const char* env = std::getenv("ISOREGION_MAX_SEARCH");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    int v = std::stoi(env);
    return v > 0 ? std::min(v, 30) : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

std::optional<OrientedDiagram> wd_exception_search(const LinkProjection& shadow) {
  const int c = shadow.crossing_count();
  if (c > max_search_crossings())
    throw SearchTooLarge(std::to_string(c) + " crossings exceeds the search cutoff of " +
                         std::to_string(max_search_crossings()));
  const int target = projection_warping_degree(shadow);
  std::vector<int> pairs(c);
  for (unsigned long mask = 0; mask < (1UL << c); ++mask) {
    for (int v = 0; v < c; ++v) pairs[v] = static_cast<int>((mask >> (c - 1 - v)) & 1UL);
    OrientedDiagram D(shadow, pairs, Dart{0, 0});
    if (warping_stats(D).d_bar > target) return D;
  }
  return std::nullopt;
}

}  // namespace isoregion
