#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "isoregion/pdcode.hpp"

namespace isoregion {

enum class Direction { forward, backward };

// A knot diagram: a single-strand shadow, the over strand at each crossing and
// a direction of travel. The strand entering slot s leaves through slot s+2.
class OrientedDiagram {
 public:
  // over_pairs[v] in {0, 1} names the slot pair {s, s+2} carrying the over
  // strand. The walk starts by leaving crossing first_exit.crossing through
  // first_exit. Throws NotAKnot, TrivialProjection, RangeError.
  OrientedDiagram(LinkProjection shadow, std::vector<int> over_pairs, Dart first_exit);

  const LinkProjection& shadow() const { return shadow_; }
  const std::vector<int>& over_pairs() const { return over_pairs_; }
  int crossing_count() const { return shadow_.crossing_count(); }

  // Exit darts in travel order; walk step k runs along the edge of walk()[k].
  const std::vector<Dart>& walk() const { return walk_; }
  std::vector<int> edge_order() const;

  // Whether the strand passes over at the crossing reached at the end of step k.
  bool passes_over(int k) const;

  OrientedDiagram reversed() const;
  OrientedDiagram mirrored() const;
  OrientedDiagram with_crossing_changed(int crossing) const;

 private:
  LinkProjection shadow_;
  std::vector<int> over_pairs_;
  std::vector<Dart> walk_;
};

// Forward starts by leaving crossing 0 through slot 0.
OrientedDiagram make_diagram(const LinkProjection& shadow, std::vector<int> over_pairs,
                             Direction direction = Direction::forward);
// Orientation given as the full list of edge labels in travel order.
// Throws InvalidEdge if the list is not a traversal of the strand.
OrientedDiagram make_diagram(const LinkProjection& shadow, std::vector<int> over_pairs,
                             const std::vector<int>& edge_order);

// PD text where the strand entering at the first listed edge passes under.
// Without an edge order the strand runs from slot 0 to slot 2 at crossing 0.
OrientedDiagram parse_diagram(std::string_view pd, const std::optional<std::vector<int>>& edge_order = std::nullopt);

struct WarpingLabeling {
  std::vector<int> along_walk;  // label of walk step k
  std::map<int, int> by_edge;   // edge label -> warping degree with base point on it
};

// d(D_b) for a base point on every edge, by a full traversal from each edge.
WarpingLabeling warping_labeling(const OrientedDiagram& D);

struct WarpingStats {
  int d = 0;
  int d_rev = 0;
  int d_bar = 0;
  int span = 0;
  int max_label = 0;
  int c = 0;
};

WarpingStats warping_stats(const OrientedDiagram& D);

bool is_alternating(const OrientedDiagram& D);
bool is_almost_alternating(const OrientedDiagram& D);
bool has_monogon(const OrientedDiagram& D);

// Over/under assigned alternately along the forward walk. Throws NotAKnot.
OrientedDiagram alternating_diagram(const LinkProjection& shadow);

// Unoriented warping degree of the alternating diagram over the shadow.
int projection_warping_degree(const LinkProjection& shadow);

struct WeldedBounds {
  int bound_dbar = 0;
  int bound_c_minus_i = 0;
  bool almost_alternating = false;         // c - I applies as an almost alternating diagram
  bool small_irreducible_no_exception = false;  // c <= 9, irreducible, no exception found
  int headline = 0;                        // minimum applicable bound

  bool c_minus_i_applicable() const { return almost_alternating || small_irreducible_no_exception; }
};

WeldedBounds welded_bounds(const OrientedDiagram& D);

// Brute-force cutoff for 2^c searches; ISOREGION_MAX_SEARCH overrides the default 12.
int max_search_crossings();

// First diagram, in lexicographic order of over_pairs, whose unoriented warping
// degree exceeds that of the shadow. Throws SearchTooLarge above the cutoff.
std::optional<OrientedDiagram> wd_exception_search(const LinkProjection& shadow);

}  // namespace isoregion
