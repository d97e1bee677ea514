#include "isoregion/census.hpp"

#include <algorithm>
#include <set>

#include "isoregion/errors.hpp"
#include "isoregion/torus.hpp"
#include "isoregion/warping.hpp"

namespace isoregion {

namespace {

class RotationSystemSearch {
 public:
  RotationSystemSearch(int c, const std::function<void(const LinkProjection&)>& visit)
      : c_(c), mates_(4 * c, -1), visit_(visit) {}

  void run() { extend(1); }

 private:
  void extend(int discovered) {
    int d = 0;
    while (d < 4 * c_ && mates_[d] >= 0) ++d;
    if (d == 4 * c_) {
      LinkProjection L = LinkProjection::from_mates(mates_);
      if (count_faces(L) == c_ + 2) visit_(L);
      return;
    }
    // Every dart of the discovered crossings is matched: the rest is unreachable.
    if (d / 4 >= discovered) return;
    for (int e = d + 1; e < 4 * discovered; ++e) {
      if (mates_[e] >= 0) continue;
      join(d, e);
      extend(discovered);
      split(d, e);
    }
    if (discovered < c_) {
      const int e = 4 * discovered;
      join(d, e);
      extend(discovered + 1);
      split(d, e);
    }
  }

  void join(int a, int b) {
    mates_[a] = b;
    mates_[b] = a;
  }
  void split(int a, int b) { mates_[a] = mates_[b] = -1; }

  int c_;
  std::vector<int> mates_;
  const std::function<void(const LinkProjection&)>& visit_;
};

}  // namespace

void for_each_rotation_system(int c, const std::function<void(const LinkProjection&)>& visit) {
  if (c < 1) throw RangeError("rotation systems need at least one crossing");
  RotationSystemSearch(c, visit).run();
}

std::vector<LinkProjection> enumerate_projections(const CensusConfig& cfg) {
  if (cfg.max_crossings < 0) throw RangeError("max_crossings must be non-negative");
  if (cfg.max_crossings > census_extended_crossings ||
      (cfg.max_crossings > census_supported_crossings && !cfg.extended)) {
    throw LimitExceeded("census supports up to " + std::to_string(census_supported_crossings) +
                        " crossings (" + std::to_string(census_extended_crossings) + " when extended)");
  }
  std::vector<LinkProjection> out{LinkProjection::trivial_circle()};
  for (int c = 1; c <= cfg.max_crossings; ++c) {
    std::map<std::vector<int>, LinkProjection> classes;
    for_each_rotation_system(c, [&](const LinkProjection& L) {
      if (cfg.knots_only && strand_count(L) != 1) return;
      if (!cfg.dedup) {
        out.push_back(L);
        return;
      }
      auto code = canonical_code(L, cfg.identify_reflections);
      if (!classes.contains(code)) classes.emplace(code, LinkProjection::from_mates(code));
    });
    for (auto& [code, L] : classes) out.push_back(std::move(L));
  }
  return out;
}

namespace {

class RecordChecks {
 public:
  explicit RecordChecks(CensusRecord& rec) : rec_(rec) {}

  void check(const std::string& name, bool ok) { (ok ? rec_.passed : rec_.failed).push_back(name); }

 private:
  CensusRecord& rec_;
};

bool proper_checkerboard(const LinkProjection& L) {
  const auto colors = checkerboard(L);
  if (L.is_trivial_circle()) return colors[0] != colors[1];
  const auto rs = regions(L);
  for (int d = 0; d < L.dart_count(); ++d)
    if (colors[rs.region_of_dart[d]] == colors[rs.region_of_dart[L.mates()[d]]]) return false;
  return true;
}

// Some two regions across the edges of each k-gon (k >= 4) share no crossing.
bool ngon_neighbors_disconnected(const LinkProjection& L, const RegionSet& rs, const RegionGraph& G) {
  for (const auto& r : rs.regions) {
    if (r.gon() < 4) continue;
    std::set<int> around;
    for (Dart d : r.corners) around.insert(rs.region_of_dart[L.mate(d).index()]);
    around.erase(r.id);
    bool found = false;
    for (auto a = around.begin(); a != around.end() && !found; ++a)
      for (auto b = std::next(a); b != around.end() && !found; ++b) found = !G.adjacent(*a, *b);
    if (!found) return false;
  }
  return true;
}

bool disconnected_small_faces(const RegionSet& rs, const RegionGraph& G) {
  for (const auto& a : rs.regions)
    for (const auto& b : rs.regions)
      if (a.id < b.id && a.gon() >= 2 && a.gon() <= 3 && b.gon() >= 2 && b.gon() <= 3 && !G.adjacent(a.id, b.id))
        return true;
  return false;
}

bool igen_shape(const IGenPolynomial& f, int c, int isolate) {
  if (f.coeffs.size() < 2 || f.coeffs[0] != 1 || f.coeffs[1] != c + 2) return false;
  if (f.degree() != isolate) return false;
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](std::int64_t a) { return a > 0; });
}

bool region_chain(const LinkProjection& L, int isolate, int ir) {
  const int c = L.crossing_count();
  const OrientedDiagram A = alternating_diagram(L);
  for (const OrientedDiagram& D : {A, A.reversed(), A.mirrored(), A.mirrored().reversed()}) {
    const int d = warping_stats(D).d;
    if (!(isolate - 1 <= ir && ir <= d && d <= c - ir - 1 && c - ir - 1 <= c - isolate)) return false;
  }
  return true;
}

bool span_matches_alternation(const LinkProjection& L) {
  const int c = L.crossing_count();
  std::vector<int> pairs(c);
  for (unsigned mask = 0; mask < (1U << c); ++mask) {
    for (int v = 0; v < c; ++v) pairs[v] = static_cast<int>((mask >> v) & 1U);
    OrientedDiagram D = make_diagram(L, pairs);
    if ((warping_stats(D).span == 1) != is_alternating(D)) return false;
  }
  return true;
}

}  // namespace

CensusRecord census_record(const LinkProjection& L) {
  CensusRecord rec;
  RecordChecks checks(rec);
  rec.pd = L.to_pd();
  rec.c = L.crossing_count();
  rec.strands = strand_count(L);
  rec.connected = is_connected(L);
  checks.check("valid", validate(L).is_valid);

  const RegionSet rs = regions(L);
  const RegionGraph G = region_graph(L);
  const int c = rec.c;
  rec.irreducible = is_irreducible(L);
  rec.gons = gon_census(L);
  rec.isolate = isolate_number(G);
  rec.igen = igen_polynomial(G);
  if (c >= 1) rec.independent_region = independent_region_number(L);

  int gon_sum = 0;
  for (const auto& r : rs.regions) gon_sum += r.gon();
  checks.check("region_count", rs.size() == c + 2 && gon_sum == 4 * c);
  checks.check("checkerboard", proper_checkerboard(L));
  checks.check("igen_shape", igen_shape(rec.igen, c, rec.isolate));

  if (c >= 1 && rec.irreducible) {
    checks.check("ast_identity", ast_identity_residual(L) == 0);
    checks.check("ngon_neighbors", ngon_neighbors_disconnected(L, rs, G));
    checks.check("a2_bounds", a2_bounds_check(L).ok);
  }
  if (c >= 4 && rec.irreducible) checks.check("small_face_pair", disconnected_small_faces(rs, G));
  if (c >= 4) checks.check("four_crossings_isolate", rec.isolate >= 2);
  if (c >= 2 && !rec.irreducible) checks.check("reducible_isolate", rec.isolate >= 2);
  if (c >= 1 && rec.strands == 1) {
    if (rec.irreducible) checks.check("region_chain", region_chain(L, rec.isolate, *rec.independent_region));
    if (c <= census_extended_crossings) checks.check("span_alternating", span_matches_alternation(L));
  }
  return rec;
}

CensusReport corpus_property_suite(int max_c, bool extended) {
  CensusConfig cfg;
  cfg.max_crossings = max_c;
  cfg.extended = extended;
  cfg.dedup = true;
  CensusReport report;
  for (const auto& L : enumerate_projections(cfg)) {
    CensusRecord rec = census_record(L);
    for (const auto& name : rec.passed) ++report.checks[name].passed;
    for (const auto& name : rec.failed) {
      ++report.checks[name].failed;
      report.failures.push_back(name + ": " + (rec.pd.empty() ? "<circle>" : rec.pd));
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

ClassificationReport verify_isolate_one_classification(int max_c, bool extended) {
  CensusConfig cfg;
  cfg.max_crossings = max_c;
  cfg.extended = extended;
  cfg.dedup = true;
  std::map<std::vector<int>, std::string> expected;
  expected.emplace(std::vector<int>{}, "T(2,0)");
  for (int n = 1; n <= std::min(3, max_c); ++n)
    expected.emplace(canonical_code(torus_projection(n)), "T(2," + std::to_string(n) + ")");

  ClassificationReport rep;
  std::set<std::vector<int>> found;
  for (const auto& L : enumerate_projections(cfg)) {
    const int isolate = isolate_number(region_graph(L));
    const int c = L.crossing_count();
    if (isolate == 1) {
      rep.isolate_one.push_back(L.to_pd());
      auto code = canonical_code(L);
      if (expected.contains(code)) found.insert(code);
      else rep.unexpected.push_back(L.to_pd());
    }
    if (c >= 4) {
      ++rep.four_plus_checked;
      if (isolate < 2) ++rep.four_plus_violations;
    }
    if (c >= 2 && !is_irreducible(L)) {
      ++rep.reducible_checked;
      if (isolate < 2) ++rep.reducible_violations;
    }
  }
  for (const auto& [code, name] : expected)
    if (!found.contains(code)) rep.missing.push_back(name);
  rep.ok = rep.missing.empty() && rep.unexpected.empty() && rep.four_plus_violations == 0 &&
           rep.reducible_violations == 0;
  return rep;
}

}  // namespace isoregion
