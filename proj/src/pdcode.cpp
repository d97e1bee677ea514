#include "isoregion/pdcode.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "isoregion/errors.hpp"

namespace isoregion {

LinkProjection::LinkProjection(std::vector<std::array<int, 4>> crossings)
    : crossings_(std::move(crossings)) {
  std::map<int, std::vector<int>> seen;
  for (int v = 0; v < crossing_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      int label = crossings_[v][s];
      if (label <= 0) throw LabelError("edge label " + std::to_string(label) + " is not positive");
      seen[label].push_back(4 * v + s);
    }
  }
  std::vector<int> bad;
  for (const auto& [label, darts] : seen)
    if (darts.size() != 2) bad.push_back(label);
  if (!bad.empty()) {
    std::string msg = "labels not appearing exactly twice:";
    for (int b : bad) msg += " " + std::to_string(b);
    throw LabelError(msg);
  }

  mates_.assign(dart_count(), -1);
  int next = 1;
  for (const auto& [label, darts] : seen) {
    for (int d : darts) crossings_[d / 4][d % 4] = next;
    mates_[darts[0]] = darts[1];
    mates_[darts[1]] = darts[0];
    ++next;
  }
}

LinkProjection LinkProjection::from_mates(const std::vector<int>& mates) {
  if (mates.size() % 4 != 0) throw LabelError("dart count is not a multiple of four");
  const int n = static_cast<int>(mates.size());
  std::vector<std::array<int, 4>> crossings(n / 4);
  std::vector<int> label(n, 0);
  int next = 1;
  for (int d = 0; d < n; ++d) {
    int m = mates[d];
    if (m < 0 || m >= n || m == d || mates[m] != d) throw LabelError("dart pairing is not an involution");
    if (label[d] == 0) label[d] = label[m] = next++;
    crossings[d / 4][d % 4] = label[d];
  }
  return LinkProjection(std::move(crossings));
}

std::pair<Dart, Dart> LinkProjection::edge_darts(int label) const {
  for (int d = 0; d < dart_count(); ++d) {
    Dart dart = Dart::from_index(d);
    if (this->label(dart) == label) return {dart, mate(dart)};
  }
  throw InvalidEdge("no edge labelled " + std::to_string(label));
}

std::string LinkProjection::to_pd() const {
  std::string out;
  for (const auto& x : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
           "," + std::to_string(x[3]) + ")";
  }
  return out;
}

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<std::array<int, 4>> run() {
    std::vector<std::array<int, 4>> crossings;
    skip_space();
    while (pos_ < text_.size()) {
      crossings.push_back(token());
      skip_space();
    }
    return crossings;
  }

 private:
  std::array<int, 4> token() {
    const std::size_t start = pos_;
    expect('X');
    skip_space();
    expect('(');
    std::array<int, 4> labels{};
    for (int i = 0; i < 4; ++i) {
      skip_space();
      labels[i] = number();
      skip_space();
      expect(i < 3 ? ',' : ')');
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
      fail("missing whitespace after token starting", start);
    return labels;
  }

  int number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer", pos_);
    if (value <= 0) fail("edge labels must be positive integers", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw SyntaxError(what + " at offset " + std::to_string(at));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Orbits of an arbitrary permutation on [0, n).
template <class Next>
int count_orbits(int n, Next next) {
  std::vector<char> seen(n, 0);
  int orbits = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (int d = start; !seen[d]; d = next(d)) seen[d] = 1;
  }
  return orbits;
}

}  // namespace

LinkProjection parse_pd(std::string_view text) { return LinkProjection(PdScanner(text).run()); }

int count_faces(const LinkProjection& L) {
  if (L.is_trivial_circle()) return 2;
  return count_orbits(L.dart_count(), [&](int d) { return face_successor(L, Dart::from_index(d)).index(); });
}

bool is_connected(const LinkProjection& L) {
  const int c = L.crossing_count();
  if (c == 0) return true;
  std::vector<char> seen(c, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int w = L.mate(Dart{v, s}).crossing;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == c;
}

int strand_count(const LinkProjection& L) {
  if (L.is_trivial_circle()) return 1;
  // Each strand is traced once in each direction.
  return count_orbits(L.dart_count(),
                      [&](int d) { return opposite(L.mate(Dart::from_index(d))).index(); }) /
         2;
}

namespace {

RegionSet trace_regions(const LinkProjection& L) {
  RegionSet out;
  if (L.is_trivial_circle()) {
    out.regions = {Region{0, {}, {}}, Region{1, {}, {}}};
    return out;
  }
  out.region_of_dart.assign(L.dart_count(), -1);
  for (int start = 0; start < L.dart_count(); ++start) {
    if (out.region_of_dart[start] >= 0) continue;
    Region r;
    r.id = out.size();
    Dart d = Dart::from_index(start);
    do {
      out.region_of_dart[d.index()] = r.id;
      r.corners.push_back(d);
      r.boundary_crossings.push_back(d.crossing);
      d = face_successor(L, d);
    } while (d.index() != start);
    out.regions.push_back(std::move(r));
  }
  return out;
}

std::vector<int> reducible_from(const LinkProjection& L, const RegionSet& rs) {
  std::vector<int> out;
  for (int v = 0; v < L.crossing_count(); ++v) {
    std::array<int, 4> around{};
    for (int s = 0; s < 4; ++s) around[s] = rs.region_of_dart[Dart{v, s}.index()];
    std::sort(around.begin(), around.end());
    if (std::unique(around.begin(), around.end()) - around.begin() == 3) out.push_back(v);
  }
  return out;
}

}  // namespace

ValidationReport validate(const LinkProjection& L) {
  ValidationReport rep;
  rep.crossing_count = L.crossing_count();
  rep.face_count = count_faces(L);
  rep.connected = is_connected(L);
  if (!rep.connected) rep.messages.push_back("underlying graph is disconnected");
  if (rep.face_count != rep.crossing_count + 2) {
    rep.messages.push_back("non-spherical embedding: " + std::to_string(rep.face_count) + " faces, expected " +
                           std::to_string(rep.crossing_count + 2));
  }
  rep.is_valid = rep.connected && rep.face_count == rep.crossing_count + 2;
  if (rep.is_valid) rep.reducible_crossings = reducible_from(L, trace_regions(L));
  return rep;
}

RegionSet regions(const LinkProjection& L) {
  auto rep = validate(L);
  if (!rep.is_valid) {
    std::string msg = "invalid projection";
    for (const auto& m : rep.messages) msg += "; " + m;
    throw InvalidProjection(msg);
  }
  return trace_regions(L);
}

GonCensus gon_census(const LinkProjection& L) {
  GonCensus census;
  for (const auto& r : regions(L).regions) ++census[r.gon()];
  return census;
}

int ast_identity_residual(const LinkProjection& L) {
  if (L.is_trivial_circle()) throw TrivialProjection("residual needs at least one crossing");
  if (!is_connected(L)) throw NotConnected("projection is not connected");
  if (!is_irreducible(L)) throw NotIrreducible("projection has a reducible crossing");
  int residual = -8;
  for (auto [k, count] : gon_census(L)) {
    if (k == 2) residual += 2 * count;
    else if (k == 3) residual += count;
    else if (k >= 5) residual -= (k - 4) * count;
  }
  return residual;
}

std::vector<Color> checkerboard(const LinkProjection& L) {
  const RegionSet rs = regions(L);
  if (L.is_trivial_circle()) return {Color::black, Color::white};

  // Faces on the two sides of edge {d, mate(d)} are region(d) and region(mate(d)).
  std::vector<std::vector<int>> across(rs.size());
  for (int d = 0; d < L.dart_count(); ++d) {
    int a = rs.region_of_dart[d];
    int b = rs.region_of_dart[L.mates()[d]];
    across[a].push_back(b);
  }
  std::vector<int> color(rs.size(), -1);
  for (int root = 0; root < rs.size(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : across[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          throw InvalidProjection("regions " + std::to_string(u) + " and " + std::to_string(w) +
                                  " cannot be checkerboard coloured");
        }
      }
    }
  }
  std::vector<Color> out(rs.size());
  std::transform(color.begin(), color.end(), out.begin(),
                 [](int c) { return c == 0 ? Color::black : Color::white; });
  return out;
}

std::vector<int> reducible_crossings(const LinkProjection& L) {
  return reducible_from(L, regions(L));
}

LinkProjection connected_sum(const LinkProjection& L1, int e1, const LinkProjection& L2, int e2, SumMode mode) {
  for (const auto* L : {&L1, &L2})
    if (!validate(*L).is_valid) throw InvalidProjection("connected sum needs valid projections");
  if (L2.is_trivial_circle()) {
    if (!L1.is_trivial_circle()) L1.edge_darts(e1);
    return L1;
  }
  if (L1.is_trivial_circle()) {
    L2.edge_darts(e2);
    return L2;
  }
  auto [p, q] = L1.edge_darts(e1);
  auto [r, t] = L2.edge_darts(e2);
  const int offset = L1.dart_count();
  std::vector<int> mates(L1.mates());
  for (int m : L2.mates()) mates.push_back(m + offset);
  const int r2 = r.index() + offset;
  const int t2 = t.index() + offset;
  const int p1 = p.index();
  const int q1 = q.index();
  auto join = [&](int a, int b) {
    mates[a] = b;
    mates[b] = a;
  };
  if (mode == SumMode::A) {
    join(p1, r2);
    join(q1, t2);
  } else {
    join(p1, t2);
    join(q1, r2);
  }
  return LinkProjection::from_mates(mates);
}

namespace {

std::vector<int> traversal_code(const LinkProjection& L, Dart start, bool reflect) {
  const int c = L.crossing_count();
  std::vector<int> new_id(c, -1);
  std::vector<int> offset(c, 0);
  std::vector<int> order;
  order.reserve(c);
  new_id[start.crossing] = 0;
  offset[start.crossing] = start.slot;
  order.push_back(start.crossing);

  auto local_slot = [&](Dart d) {
    int o = offset[d.crossing];
    return reflect ? ((o - d.slot) % 4 + 4) % 4 : ((d.slot - o) % 4 + 4) % 4;
  };

  std::vector<int> code;
  code.reserve(L.dart_count());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    for (int j = 0; j < 4; ++j) {
      int slot = reflect ? ((offset[v] - j) % 4 + 4) % 4 : (offset[v] + j) % 4;
      Dart m = L.mate(Dart{v, slot});
      if (new_id[m.crossing] < 0) {
        new_id[m.crossing] = static_cast<int>(order.size());
        offset[m.crossing] = m.slot;
        order.push_back(m.crossing);
      }
      code.push_back(4 * new_id[m.crossing] + local_slot(m));
    }
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const LinkProjection& L, bool allow_reflection) {
  if (L.is_trivial_circle()) return {};
  if (!is_connected(L)) throw NotConnected("canonical form needs a connected projection");
  std::vector<int> best;
  for (int d = 0; d < L.dart_count(); ++d) {
    for (bool reflect : {false, true}) {
      if (reflect && !allow_reflection) continue;
      auto code = traversal_code(L, Dart::from_index(d), reflect);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

LinkProjection canonical_form(const LinkProjection& L, bool allow_reflection) {
  if (L.is_trivial_circle()) return L;
  return LinkProjection::from_mates(canonical_code(L, allow_reflection));
}

bool isomorphic(const LinkProjection& a, const LinkProjection& b, bool allow_reflection) {
  if (a.crossing_count() != b.crossing_count()) return false;
  return canonical_code(a, allow_reflection) == canonical_code(b, allow_reflection);
}

}  // namespace isoregion
