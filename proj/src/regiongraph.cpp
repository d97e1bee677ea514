#include "isoregion/regiongraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "isoregion/errors.hpp"

namespace isoregion {

namespace {

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

int lowest(VertexMask m) { return std::countr_zero(m); }

// Bits 0..v inclusive.
constexpr VertexMask through(int v) { return v >= 63 ? ~VertexMask{0} : bit(v + 1) - 1; }

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i + 1);
  return labels;
}

}  // namespace

RegionGraph::RegionGraph(int n) : RegionGraph(n, default_labels(n)) {}

RegionGraph::RegionGraph(int n, std::vector<std::string> labels)
    : adjacency_(n, 0), labels_(std::move(labels)) {
  if (n < 0 || n > max_vertices)
    throw RangeError("region graphs hold at most " + std::to_string(max_vertices) + " vertices");
  if (static_cast<int>(labels_.size()) != n) throw RangeError("one label per vertex required");
}

int RegionGraph::degree(int v) const { return std::popcount(adjacency_[v]); }

VertexMask RegionGraph::all_vertices() const {
  return vertex_count() == 64 ? ~VertexMask{0} : bit(vertex_count()) - 1;
}

void RegionGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw RangeError("vertex out of range");
  if (u == v) return;
  adjacency_[u] |= bit(v);
  adjacency_[v] |= bit(u);
}

std::vector<std::pair<int, int>> RegionGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (VertexMask m = adjacency_[u] & ~through(u); m; m &= m - 1) out.emplace_back(u, lowest(m));
  return out;
}

std::int64_t IGenPolynomial::at_one() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

RegionGraph region_graph(const LinkProjection& L) {
  const RegionSet rs = regions(L);
  RegionGraph G(rs.size());
  if (L.is_trivial_circle()) {
    G.add_edge(0, 1);
    return G;
  }
  for (int v = 0; v < L.crossing_count(); ++v)
    for (int s = 0; s < 4; ++s)
      for (int t = s + 1; t < 4; ++t)
        G.add_edge(rs.region_of_dart[Dart{v, s}.index()], rs.region_of_dart[Dart{v, t}.index()]);
  return G;
}

RegionGraph complement(const RegionGraph& G) {
  RegionGraph H(G.vertex_count(), G.labels());
  for (int u = 0; u < G.vertex_count(); ++u)
    for (int v = u + 1; v < G.vertex_count(); ++v)
      if (!G.adjacent(u, v)) H.add_edge(u, v);
  return H;
}

namespace {

// Branch and bound for a maximum independent set. The bound partitions the
// candidates greedily into cliques of G; an independent set uses at most one
// vertex from each.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const RegionGraph& G) : G_(G) {}

  IsolatedSet run(VertexMask candidates) {
    best_.clear();
    current_.clear();
    expand(candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(VertexMask candidates) {
    if (candidates == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    clique_cover(candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current_.push_back(v);
      expand(candidates & ~G_.neighbors(v) & ~bit(v));
      current_.pop_back();
      candidates &= ~bit(v);
    }
  }

  void clique_cover(VertexMask candidates, std::vector<int>& order, std::vector<int>& bound) const {
    int classes = 0;
    VertexMask left = candidates;
    while (left) {
      ++classes;
      // Vertices still able to join the current clique.
      VertexMask open = left;
      while (open) {
        int v = lowest(open);
        open &= G_.neighbors(v);
        left &= ~bit(v);
        order.push_back(v);
        bound.push_back(classes);
      }
    }
  }

  const RegionGraph& G_;
  IsolatedSet best_;
  IsolatedSet current_;
};

}  // namespace

int isolate_number(const RegionGraph& G, VertexMask within) {
  return static_cast<int>(IndependentSetSearch(G).run(within & G.all_vertices()).size());
}

int isolate_number(const RegionGraph& G) { return isolate_number(G, G.all_vertices()); }

IsolatedSet maximum_isolated_set(const RegionGraph& G) { return IndependentSetSearch(G).run(G.all_vertices()); }

int independent_region_number(const LinkProjection& L) {
  if (L.is_trivial_circle()) throw TrivialProjection("independent region number needs a nontrivial projection");
  const RegionSet rs = regions(L);
  const RegionGraph G = region_graph(L);
  int best = 0;
  for (int v = 0; v < L.crossing_count(); ++v) {
    VertexMask avoid = 0;
    for (int s = 0; s < 4; ++s) avoid |= bit(rs.region_of_dart[Dart{v, s}.index()]);
    best = std::max(best, isolate_number(G, G.all_vertices() & ~avoid));
  }
  return best;
}

namespace {

using Coeffs = std::vector<std::int64_t>;

void add_into(Coeffs& acc, const Coeffs& p, int shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

class IndependencePolynomial {
 public:
  explicit IndependencePolynomial(const RegionGraph& G) : G_(G) {}

  Coeffs of(VertexMask S) {
    if (auto it = memo_.find(S); it != memo_.end()) return it->second;
    Coeffs result = compute(S);
    memo_.emplace(S, result);
    return result;
  }

 private:
  Coeffs compute(VertexMask S) {
    int pivot = -1;
    int pivot_degree = 0;
    for (VertexMask m = S; m; m &= m - 1) {
      int v = lowest(m);
      int d = std::popcount(G_.neighbors(v) & S);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot < 0) return binomial_row(std::popcount(S));  // edgeless: (1+x)^k
    Coeffs result = of(S & ~bit(pivot));
    add_into(result, of(S & ~bit(pivot) & ~G_.neighbors(pivot)), 1);
    return result;
  }

  static Coeffs binomial_row(int k) {
    Coeffs row{1};
    for (int i = 0; i < k; ++i) {
      row.push_back(0);
      for (int j = i + 1; j > 0; --j) row[j] += row[j - 1];
    }
    return row;
  }

  const RegionGraph& G_;
  std::unordered_map<VertexMask, Coeffs> memo_;
};

}  // namespace

IGenPolynomial igen_polynomial(const RegionGraph& G) {
  return IGenPolynomial{IndependencePolynomial(G).of(G.all_vertices())};
}

std::vector<IsolatedSet> list_isolated_sets(const RegionGraph& G, std::optional<int> k) {
  std::vector<IsolatedSet> out;
  if (k && *k < 0) return out;
  IsolatedSet current;
  // Depth-first with increasing vertices emits sets in lexicographic order.
  auto visit = [&](auto&& self, VertexMask candidates) -> void {
    if (!k || static_cast<int>(current.size()) == *k) out.push_back(current);
    if (k && static_cast<int>(current.size()) >= *k) return;
    for (VertexMask m = candidates; m; m &= m - 1) {
      int v = lowest(m);
      current.push_back(v);
      self(self, candidates & ~G.neighbors(v) & ~through(v));
      current.pop_back();
    }
  };
  visit(visit, G.all_vertices());
  return out;
}

RegionGraph split_sum_graph(const RegionGraph& GA, int ra, const RegionGraph& GB, int rb) {
  if (ra < 0 || ra >= GA.vertex_count()) throw InvalidRegion("region " + std::to_string(ra) + " not in first graph");
  if (rb < 0 || rb >= GB.vertex_count()) throw InvalidRegion("region " + std::to_string(rb) + " not in second graph");
  const int na = GA.vertex_count();
  const int n = na + GB.vertex_count() - 1;
  if (n > RegionGraph::max_vertices) throw RangeError("split sum exceeds vertex capacity");

  std::vector<int> place(GB.vertex_count());
  std::vector<std::string> labels;
  for (const auto& l : GA.labels()) labels.push_back("A." + l);
  labels[ra] += "+B." + GB.labels()[rb];
  for (int v = 0, next = na; v < GB.vertex_count(); ++v) {
    if (v == rb) {
      place[v] = ra;
    } else {
      place[v] = next++;
      labels.push_back("B." + GB.labels()[v]);
    }
  }
  RegionGraph G(n, std::move(labels));
  for (auto [u, v] : GA.edges()) G.add_edge(u, v);
  for (auto [u, v] : GB.edges()) G.add_edge(place[u], place[v]);
  return G;
}

A2Bounds a2_bounds_check(const LinkProjection& L) {
  if (L.is_trivial_circle()) throw TrivialProjection("a2 bounds need at least one crossing");
  if (!is_connected(L)) throw NotConnected("projection is not connected");
  if (!is_irreducible(L)) throw NotIrreducible("projection has a reducible crossing");
  const std::int64_t c = L.crossing_count();
  const auto f = igen_polynomial(region_graph(L));
  A2Bounds out;
  out.a2 = f.coeffs.size() > 2 ? f.coeffs[2] : 0;
  out.lower = (c * c - 5 * c + 2) / 2;
  out.upper = (c * c + 3 * c + 2) / 2;
  out.ok = out.lower <= out.a2 && out.a2 <= out.upper;
  return out;
}

}  // namespace isoregion
