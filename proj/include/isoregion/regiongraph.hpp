#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoregion/pdcode.hpp"

namespace isoregion {

using VertexMask = std::uint64_t;

// Simple undirected graph on at most 64 vertices, stored as neighbour masks.
class RegionGraph {
 public:
  static constexpr int max_vertices = 64;

  RegionGraph() = default;
  explicit RegionGraph(int n);
  RegionGraph(int n, std::vector<std::string> labels);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  VertexMask neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1U; }
  int degree(int v) const;
  VertexMask all_vertices() const;

  // Ignores self-loops so the relation stays irreflexive.
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const RegionGraph& a, const RegionGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexMask> adjacency_;
  std::vector<std::string> labels_;
};

// Dense integer polynomial; coeffs[k] is the coefficient of x^k.
struct IGenPolynomial {
  std::vector<std::int64_t> coeffs{1};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t at_one() const;
  friend bool operator==(const IGenPolynomial&, const IGenPolynomial&) = default;
};

using IsolatedSet = std::vector<int>;

// Vertices are the regions of L (labelled x1..x{c+2}); two regions are adjacent
// when they share a crossing. The circle gives two adjacent vertices.
RegionGraph region_graph(const LinkProjection& L);
RegionGraph complement(const RegionGraph& G);

// Exact maximum independent set size (branch and bound, greedy clique-cover bound).
int isolate_number(const RegionGraph& G);
int isolate_number(const RegionGraph& G, VertexMask within);
// One maximum independent set, lexicographically first among those found.
IsolatedSet maximum_isolated_set(const RegionGraph& G);

// Max over crossings of the isolate number of the regions avoiding that crossing.
// Throws TrivialProjection for the circle.
int independent_region_number(const LinkProjection& L);

// Independence polynomial by vertex deletion on a maximum-degree pivot.
IGenPolynomial igen_polynomial(const RegionGraph& G);

// All independent sets (of size k when given) in lexicographic order.
std::vector<IsolatedSet> list_isolated_sets(const RegionGraph& G, std::optional<int> k = std::nullopt);

// Disjoint union with ra and rb identified; the merged vertex keeps position ra.
// Throws InvalidRegion.
RegionGraph split_sum_graph(const RegionGraph& GA, int ra, const RegionGraph& GB, int rb);

struct A2Bounds {
  std::int64_t a2 = 0;
  // Both bounds are integers: c^2-5c+2 and c^2+3c+2 are always even.
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool ok = false;
};

// Throws NotConnected, NotIrreducible, TrivialProjection.
A2Bounds a2_bounds_check(const LinkProjection& L);

}  // namespace isoregion
