// isoregion: region invariants of link projections from the command line.
//
// Exit status: 0 on success, 1 when `verify` finds a failing check,
// 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isoregion/census.hpp"
#include "isoregion/errors.hpp"
#include "isoregion/json_io.hpp"
#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"
#include "isoregion/suite.hpp"
#include "isoregion/torus.hpp"
#include "isoregion/warping.hpp"

namespace {

using namespace isoregion;

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
  std::string pd;
  std::string file;
  std::optional<int> torus;
  bool trivial = false;
};

struct Options {
  InputOptions input;
  std::string format = "text";

  bool complement = false;
  bool list_sets = false;
  std::optional<int> set_size;

  std::string orientation;
  bool alternating = false;
  bool reverse = false;
  bool mirror = false;
  std::vector<int> changes;

  int torus_n = 0;
  bool closed_form = false;
  bool enumerate = false;
  bool check_recurrence = false;

  int max_c = 4;
  bool dedup = false;
  bool knots_only = false;
  bool extended = false;
  bool keep_reflections = false;
  std::string out;

  bool paper_suite = false;
  std::optional<int> inject_fault;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  auto* pd = cmd->add_option("--pd", in.pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  auto* file = cmd->add_option("--file", in.file, "File holding a PD code")->check(CLI::ExistingFile);
  auto* torus = cmd->add_option("--torus", in.torus, "Standard (2,N) torus projection")->check(CLI::PositiveNumber);
  auto* trivial = cmd->add_flag("--trivial", in.trivial, "Crossing-free circle");
  pd->excludes(file, torus, trivial);
  file->excludes(torus, trivial);
  torus->excludes(trivial);
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string read_pd_text(const InputOptions& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return in.pd;
}

bool has_input(const InputOptions& in) { return !in.pd.empty() || !in.file.empty() || in.torus || in.trivial; }

LinkProjection load_projection(const InputOptions& in) {
  if (!has_input(in)) throw CLI::ValidationError("input", "one of --pd, --file, --torus, --trivial is required");
  if (in.trivial) return LinkProjection::trivial_circle();
  if (in.torus) return torus_projection(*in.torus);
  return parse_pd(read_pd_text(in));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw SyntaxError("bad edge label '" + item + "' in orientation list");
    }
  }
  return out;
}

OrientedDiagram load_diagram(const Options& o) {
  const InputOptions& in = o.input;
  std::optional<std::vector<int>> order;
  if (!o.orientation.empty()) order = parse_int_list(o.orientation);

  OrientedDiagram D = [&] {
    if (!has_input(in)) throw CLI::ValidationError("input", "one of --pd, --file, --torus, --trivial is required");
    if (in.trivial) throw TrivialProjection("the circle has no crossings");
    if (in.torus || o.alternating) {
      const LinkProjection shadow = in.torus ? torus_projection(*in.torus) : parse_pd(read_pd_text(in));
      OrientedDiagram A = alternating_diagram(shadow);
      return order ? make_diagram(shadow, A.over_pairs(), *order) : A;
    }
    return parse_diagram(read_pd_text(in), order);
  }();
  for (int v : o.changes) {
    if (v < 0 || v >= D.crossing_count()) throw RangeError("crossing " + std::to_string(v) + " out of range");
    D = D.with_crossing_changed(v);
  }
  if (o.mirror) D = D.mirrored();
  if (o.reverse) D = D.reversed();
  return D;
}

std::string poly_text(const IGenPolynomial& f) {
  std::string out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(f.coeffs[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string list_text(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

int run_regions(const Options& o) {
  const LinkProjection L = load_projection(o.input);
  const ValidationReport rep = validate(L);
  if (!rep.is_valid) {
    if (o.format == "json") std::cout << Json{{"validation", rep}}.dump() << "\n";
    for (const auto& m : rep.messages) std::cerr << "error: " << m << "\n";
    return kExitInputError;
  }
  const RegionSet rs = regions(L);
  if (o.format == "json") {
    Json j = regions_json(L, rs);
    j["validation"] = rep;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "crossings " << L.crossing_count() << ", regions " << rs.size() << "\n";
  for (const auto& r : rs.regions) {
    std::cout << "x" << r.id + 1 << ": " << r.gon() << "-gon, crossings {" << list_text(r.boundary_crossings) << "}\n";
  }
  std::cout << "reducible crossings: {" << list_text(rep.reducible_crossings) << "}\n";
  return 0;
}

int run_graph(const Options& o) {
  RegionGraph G = region_graph(load_projection(o.input));
  if (o.complement) G = complement(G);
  if (o.format == "json") {
    std::cout << Json(G).dump() << "\n";
    return 0;
  }
  for (auto [u, v] : G.edges()) std::cout << G.labels()[u] << " " << G.labels()[v] << "\n";
  return 0;
}

int run_isolate(const Options& o) {
  const RegionGraph G = region_graph(load_projection(o.input));
  const int value = isolate_number(G);
  if (!o.list_sets) {
    if (o.format == "json") std::cout << Json{{"isolate_number", value}}.dump() << "\n";
    else std::cout << value << "\n";
    return 0;
  }
  const auto sets = list_isolated_sets(G, o.set_size);
  if (o.format == "json") {
    std::cout << Json{{"isolate_number", value}, {"sets", sets}}.dump() << "\n";
    return 0;
  }
  for (const auto& s : sets) {
    std::string line = "{";
    for (std::size_t i = 0; i < s.size(); ++i) line += (i ? ", " : "") + G.labels()[s[i]];
    std::cout << line << "}\n";
  }
  return 0;
}

int run_ir(const Options& o) {
  const int value = independent_region_number(load_projection(o.input));
  if (o.format == "json") std::cout << Json{{"independent_region_number", value}}.dump() << "\n";
  else std::cout << value << "\n";
  return 0;
}

int run_igen(const Options& o) {
  const IGenPolynomial f = igen_polynomial(region_graph(load_projection(o.input)));
  if (o.format == "json") std::cout << Json(f).dump() << "\n";
  else std::cout << poly_text(f) << "\n";
  return 0;
}

int run_warping(const Options& o) {
  const OrientedDiagram D = load_diagram(o);
  const WarpingLabeling labels = warping_labeling(D);
  const WarpingStats stats = warping_stats(D);
  if (o.format == "json") {
    std::cout << Json{{"edge_order", D.edge_order()},
                      {"over_pairs", D.over_pairs()},
                      {"labeling", labels},
                      {"stats", stats},
                      {"alternating", is_alternating(D)},
                      {"almost_alternating", is_almost_alternating(D)},
                      {"monogon", has_monogon(D)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "edge order: " << list_text(D.edge_order()) << "\n";
  std::cout << "labels:     " << list_text(labels.along_walk) << "\n";
  std::cout << "d " << stats.d << ", d(-D) " << stats.d_rev << ", unoriented " << stats.d_bar << ", span "
            << stats.span << "\n";
  std::cout << "alternating " << is_alternating(D) << ", almost alternating " << is_almost_alternating(D)
            << ", monogon " << has_monogon(D) << "\n";
  return 0;
}

int run_bounds(const Options& o) {
  const OrientedDiagram D = load_diagram(o);
  const WeldedBounds b = welded_bounds(D);
  std::optional<A2Bounds> a2;
  if (is_irreducible(D.shadow())) a2 = a2_bounds_check(D.shadow());
  if (o.format == "json") {
    Json j{{"welded", b}};
    j["a2"] = a2 ? Json(*a2) : Json(nullptr);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "welded unknotting number <= " << b.headline << " (unoriented warping degree " << b.bound_dbar;
  if (b.c_minus_i_applicable()) std::cout << ", c - I = " << b.bound_c_minus_i;
  std::cout << ")\n";
  if (a2) std::cout << "a2 = " << a2->a2 << " in [" << a2->lower << ", " << a2->upper << "]: " << (a2->ok ? "ok" : "VIOLATED") << "\n";
  return 0;
}

int run_torus(const Options& o) {
  const int n = o.torus_n;
  if (o.check_recurrence) {
    const RecurrenceCheck rc = recurrence_check(n);
    const std::int64_t at_one = fn_at_one(n);
    const bool at_one_ok = at_one == fn_at_one(n - 1) + fn_at_one(n - 2) - 2;
    if (o.format == "json") {
      std::cout << Json{{"n", n}, {"residual", rc.residual}, {"ok", rc.ok}, {"fn_at_one", at_one}, {"at_one_ok", at_one_ok}}.dump()
                << "\n";
    } else {
      std::cout << "residual " << poly_text(IGenPolynomial{rc.residual}) << ": " << (rc.ok ? "ok" : "FAILED") << "\n"
                << "f_" << n << "(1) = " << at_one << ": " << (at_one_ok ? "ok" : "FAILED") << "\n";
    }
    return rc.ok && at_one_ok ? 0 : kExitCheckFailed;
  }
  const IGenPolynomial f = o.closed_form ? torus_igen_closed_form(n) : torus_igen_enumerated(n);
  if (o.format == "json") std::cout << Json(f).dump() << "\n";
  else std::cout << poly_text(f) << "\n";
  return 0;
}

int run_census(const Options& o) {
  CensusConfig cfg;
  cfg.max_crossings = o.max_c;
  cfg.dedup = o.dedup;
  cfg.knots_only = o.knots_only;
  cfg.extended = o.extended;
  cfg.identify_reflections = !o.keep_reflections;
  const auto members = enumerate_projections(cfg);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  for (const auto& L : members) os << Json(census_record(L)).dump() << "\n";
  std::cerr << members.size() << " projections\n";
  return 0;
}

int run_verify(const Options& o) {
  SuiteOptions so;
  so.max_c = o.max_c;
  so.extended = o.extended;
  so.inject_fault_torus = o.inject_fault;
  const SuiteReport report = verify_paper_suite(so);
  if (o.format == "json") {
    std::cout << Json{{"checks", report.checks}, {"failed", report.failed_count()}}.dump() << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
                << c.detail << "\n";
    }
    std::cout << report.checks.size() - report.failed_count() << "/" << report.checks.size() << " checks passed\n";
  }
  return report.ok() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region invariants of link projections"};
  app.require_subcommand(1);
  Options o;

  auto* regions_cmd = app.add_subcommand("regions", "Regions, gon census and validation");
  auto* graph_cmd = app.add_subcommand("graph", "Region-connect graph as an edge list");
  graph_cmd->add_flag("--complement", o.complement, "Region-disconnect graph instead");
  auto* isolate_cmd = app.add_subcommand("isolate", "Isolate-region number");
  isolate_cmd->add_flag("--sets", o.list_sets, "List isolated-region sets");
  isolate_cmd->add_option("--size", o.set_size, "Only sets of this size (with --sets)");
  auto* ir_cmd = app.add_subcommand("ir", "Independent region number");
  auto* igen_cmd = app.add_subcommand("igen", "I-generating function");
  auto* warping_cmd = app.add_subcommand("warping", "Warping degree labeling of a knot diagram");
  auto* bounds_cmd = app.add_subcommand("bounds", "Welded unknotting upper bounds and a2 bounds");
  for (auto* cmd : {regions_cmd, graph_cmd, isolate_cmd, ir_cmd, igen_cmd, warping_cmd, bounds_cmd}) {
    add_input(cmd, o.input);
    add_format(cmd, o.format);
  }
  for (auto* cmd : {warping_cmd, bounds_cmd}) {
    cmd->add_option("--orientation", o.orientation, "Edge labels in travel order, comma separated");
    cmd->add_flag("--alternating", o.alternating, "Use the alternating diagram over the shadow");
    cmd->add_flag("--reverse", o.reverse, "Reverse the orientation");
    cmd->add_flag("--mirror", o.mirror, "Change every crossing");
    cmd->add_option("--change", o.changes, "Change the crossing with this index (repeatable)");
  }

  auto* torus_cmd = app.add_subcommand("torus", "I-generating function of the (2,n) torus projection");
  torus_cmd->add_option("--n", o.torus_n, "Number of crossings")->required()->check(CLI::PositiveNumber);
  auto* cf = torus_cmd->add_flag("--closed-form", o.closed_form, "Use the closed formula");
  auto* en = torus_cmd->add_flag("--enumerate", o.enumerate, "Enumerate isolated sets (default)");
  auto* rc = torus_cmd->add_flag("--check-recurrence", o.check_recurrence, "Check the three-term recurrence");
  cf->excludes(en, rc);
  en->excludes(rc);
  add_format(torus_cmd, o.format);

  auto* census_cmd = app.add_subcommand("census", "Enumerate small projections as NDJSON records");
  census_cmd->add_option("--max-c", o.max_c, "Largest crossing number")->check(CLI::NonNegativeNumber);
  census_cmd->add_flag("--dedup", o.dedup, "One projection per isomorphism class");
  census_cmd->add_flag("--knots-only", o.knots_only, "Single-component projections only");
  census_cmd->add_flag("--extended", o.extended, "Allow five crossings");
  census_cmd->add_flag("--keep-reflections", o.keep_reflections, "Treat mirror images as distinct");
  census_cmd->add_option("--out", o.out, "Write records to this file");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_flag("--paper-suite", o.paper_suite, "Run every check (the default)");
  verify_cmd->add_option("--max-c", o.max_c, "Census size for corpus checks")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--extended", o.extended, "Allow five crossings");
  verify_cmd->add_option("--inject-fault", o.inject_fault, "Perturb the published f_N (testing only)")
      ->group("");
  add_format(verify_cmd, o.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*regions_cmd) return run_regions(o);
    if (*graph_cmd) return run_graph(o);
    if (*isolate_cmd) return run_isolate(o);
    if (*ir_cmd) return run_ir(o);
    if (*igen_cmd) return run_igen(o);
    if (*warping_cmd) return run_warping(o);
    if (*bounds_cmd) return run_bounds(o);
    if (*torus_cmd) return run_torus(o);
    if (*census_cmd) return run_census(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const isoregion::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
