#include "isoregion/suite.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "isoregion/regiongraph.hpp"
#include "isoregion/torus.hpp"
#include "isoregion/warping.hpp"

namespace isoregion {

const std::vector<std::vector<std::int64_t>>& published_torus_polynomials() {
  static const std::vector<std::vector<std::int64_t>> table = {
      {1, 3},
      {1, 4},
      {1, 5},
      {1, 6, 2},
      {1, 7, 5},
      {1, 8, 9, 2},
      {1, 9, 14, 7},
      {1, 10, 20, 16, 2},
      {1, 11, 27, 30, 9},
      {1, 12, 35, 50, 25, 2},
      {1, 13, 44, 77, 55, 11},
      {1, 14, 54, 112, 105, 36, 2},
  };
  return table;
}

int SuiteReport::failed_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& r) { return !r.passed; }));
}

namespace {

std::string coeff_string(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

class Tallies {
 public:
  void record(const std::string& name, bool ok) {
    auto& t = tallies_[name];
    (ok ? t.passed : t.failed) += 1;
  }
  std::map<std::string, CheckTally> take() { return std::move(tallies_); }

 private:
  std::map<std::string, CheckTally> tallies_;
};

int min_alternating_degree(const LinkProjection& P) {
  const OrientedDiagram A = alternating_diagram(P);
  int best = warping_stats(A).d;
  for (const OrientedDiagram& D : {A.reversed(), A.mirrored(), A.mirrored().reversed()})
    best = std::min(best, warping_stats(D).d);
  return best;
}

void check_diagram(const OrientedDiagram& D, int dP, bool monogon, Tallies& t) {
  const int c = D.crossing_count();
  const auto labels = warping_labeling(D);
  const auto reversed = D.reversed();
  const auto rev_labels = warping_labeling(reversed);
  const auto stats = warping_stats(D);

  bool steps = true;
  const auto& walk = labels.along_walk;
  for (std::size_t k = 0; k < walk.size(); ++k)
    steps = steps && std::abs(walk[k] - walk[(k + 1) % walk.size()]) == 1;
  t.record("label_steps", steps);

  bool identity = true;
  for (const auto& [edge, value] : labels.by_edge) identity = identity && rev_labels.by_edge.at(edge) == c - value;
  t.record("reverse_identity", identity);

  const int d_minus = *std::min_element(rev_labels.along_walk.begin(), rev_labels.along_walk.end());
  t.record("orientation_sum", stats.d + d_minus <= c - 1);
  t.record("dbar_two_orientations", stats.d_bar == std::min(stats.d, d_minus));
  t.record("mirror_identity", warping_stats(D.mirrored()).d == d_minus);
  t.record("dbar_half_bound", 2 * stats.d_bar <= c - 1);

  const bool alternating = is_alternating(D);
  t.record("span_alternating", (stats.span == 1) == alternating);
  if (alternating) {
    t.record("alternating_dbar", stats.d_bar == dP);
    if (!monogon) {
      for (int v = 0; v < c; ++v) t.record("single_change_drop", warping_stats(D.with_crossing_changed(v)).d_bar == dP - 1);
    }
  } else if (is_almost_alternating(D)) {
    t.record("almost_alternating_bound", stats.d_bar <= dP);
  }
}

}  // namespace

std::map<std::string, CheckTally> warping_suite(const std::vector<LinkProjection>& shadows) {
  Tallies t;
  for (const auto& P : shadows) {
    if (P.is_trivial_circle() || strand_count(P) != 1) continue;
    const int c = P.crossing_count();
    const int dP = projection_warping_degree(P);
    t.record("projection_degree_definition", dP == min_alternating_degree(P));
    t.record("projection_half_bound", 2 * dP <= c - 1);
    const bool monogon = has_monogon(alternating_diagram(P));
    std::vector<int> pairs(c);
    for (unsigned mask = 0; mask < (1U << c); ++mask) {
      for (int v = 0; v < c; ++v) pairs[v] = static_cast<int>((mask >> v) & 1U);
      check_diagram(make_diagram(P, pairs), dP, monogon, t);
    }
    if (is_irreducible(P)) t.record("no_exception", !wd_exception_search(P).has_value());
  }
  return t.take();
}

SuiteReport verify_paper_suite(const SuiteOptions& options) {
  SuiteReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
  };

  auto golden = published_torus_polynomials();
  if (options.inject_fault_torus && *options.inject_fault_torus >= 1 &&
      *options.inject_fault_torus <= static_cast<int>(golden.size())) {
    golden[*options.inject_fault_torus - 1].back() += 1;
  }
  for (int n = 1; n <= static_cast<int>(golden.size()); ++n) {
    const auto got = torus_igen_enumerated(n).coeffs;
    const bool ok = got == golden[n - 1];
    add("torus golden f_" + std::to_string(n), ok,
        ok ? coeff_string(got) : "f_" + std::to_string(n) + " mismatch: enumerated " + coeff_string(got) +
                                     " published " + coeff_string(golden[n - 1]));
  }

  {
    std::string bad;
    for (int n = 1; n <= options.torus_max; ++n)
      if (torus_igen_closed_form(n) != torus_igen_enumerated(n)) bad += " n=" + std::to_string(n);
    add("torus closed form n<=" + std::to_string(options.torus_max), bad.empty(), bad);
  }
  {
    std::string bad;
    for (int n = 4; n <= options.torus_max; ++n) {
      if (!recurrence_check(n).ok) bad += " poly n=" + std::to_string(n);
      if (fn_at_one(n) != fn_at_one(n - 1) + fn_at_one(n - 2) - 2) bad += " at-one n=" + std::to_string(n);
    }
    add("torus recurrence 4<=n<=" + std::to_string(options.torus_max), bad.empty(), bad);
  }
  {
    std::string bad;
    for (int n = 2; n <= options.torus_max; ++n) {
      const auto f = torus_igen_enumerated(n);
      if (f.degree() != n / 2 || isolate_number(region_graph(torus_projection(n))) != n / 2)
        bad += " maxdeg n=" + std::to_string(n);
      if (n >= 3 && (f.coeffs.size() > 2 ? f.coeffs[2] : 0) != (n - 3) * n / 2) bad += " a2 n=" + std::to_string(n);
      if (n >= 3 && (!a2_bounds_check(torus_projection(n)).ok)) bad += " bounds n=" + std::to_string(n);
    }
    add("torus degree and second coefficient", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int m = 0; m <= 15; ++m) {
      for (int n = 0; n <= m; ++n) {
        std::int64_t brute = 0;
        for (unsigned mask = 0; mask < (1U << m); ++mask)
          if (std::popcount(mask) == n && (mask & (mask >> 1)) == 0) ++brute;
        if (brute != nonadjacent_count(m, n)) bad += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      }
    }
    add("nonadjacent count m<=15", bad.empty(), bad);
  }

  const auto cls = verify_isolate_one_classification(options.max_c, options.extended);
  {
    std::string detail = std::to_string(cls.isolate_one.size()) + " with isolate number one";
    for (const auto& m : cls.missing) detail += "; missing " + m;
    for (const auto& u : cls.unexpected) detail += "; unexpected " + u;
    detail += "; c>=4 violations " + std::to_string(cls.four_plus_violations) + "/" +
              std::to_string(cls.four_plus_checked) + "; reducible violations " +
              std::to_string(cls.reducible_violations) + "/" + std::to_string(cls.reducible_checked);
    add("isolate number one classification c<=" + std::to_string(options.max_c), cls.ok, detail);
  }

  const auto corpus = corpus_property_suite(options.max_c, options.extended);
  for (const auto& [name, tally] : corpus.checks) {
    std::string detail = std::to_string(tally.passed) + " passed, " + std::to_string(tally.failed) + " failed";
    for (const auto& f : corpus.failures)
      if (f.rfind(name + ":", 0) == 0) detail += "; " + f;
    add("corpus " + name, tally.failed == 0, detail);
  }

  CensusConfig knots;
  knots.max_crossings = options.max_c;
  knots.extended = options.extended;
  knots.knots_only = true;
  knots.dedup = true;
  for (const auto& [name, tally] : warping_suite(enumerate_projections(knots))) {
    add("warping " + name, tally.failed == 0,
        std::to_string(tally.passed) + " passed, " + std::to_string(tally.failed) + " failed");
  }
  return report;
}

}  // namespace isoregion
