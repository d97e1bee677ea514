#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isoregion {

// One edge-end at a crossing. Slots 0..3 run counterclockwise.
struct Dart {
  int crossing = 0;
  int slot = 0;

  constexpr int index() const { return 4 * crossing + slot; }
  static constexpr Dart from_index(int i) { return Dart{i / 4, i % 4}; }

  auto operator<=>(const Dart&) const = default;
};

// A connected spherical shadow stored as a rotation system: every crossing
// lists its four incident edge labels counterclockwise. The default-constructed
// value is the crossing-free circle.
class LinkProjection {
 public:
  LinkProjection() = default;

  // Throws LabelError unless every label is positive and occurs exactly twice.
  // Labels are renumbered to 1..2c preserving their relative order.
  explicit LinkProjection(std::vector<std::array<int, 4>> crossings);

  // Builds the projection from a dart involution (mate[d] for each dart index).
  static LinkProjection from_mates(const std::vector<int>& mates);

  static LinkProjection trivial_circle() { return LinkProjection(); }

  bool is_trivial_circle() const { return crossings_.empty(); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int dart_count() const { return 4 * crossing_count(); }

  const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }
  int label(Dart d) const { return crossings_[d.crossing][d.slot]; }
  Dart mate(Dart d) const { return Dart::from_index(mates_[d.index()]); }
  const std::vector<int>& mates() const { return mates_; }

  // Both ends of an edge, lower dart index first. Throws InvalidEdge.
  std::pair<Dart, Dart> edge_darts(int label) const;

  std::string to_pd() const;

  friend bool operator==(const LinkProjection& a, const LinkProjection& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> mates_;
};

// Parses whitespace separated `X(a,b,c,d)` tokens. Empty input yields the
// crossing-free circle. Throws SyntaxError or LabelError.
LinkProjection parse_pd(std::string_view text);

constexpr Dart rotate(Dart d) { return Dart{d.crossing, (d.slot + 1) % 4}; }
constexpr Dart opposite(Dart d) { return Dart{d.crossing, (d.slot + 2) % 4}; }

// Face successor: rotate(mate(d)).
inline Dart face_successor(const LinkProjection& L, Dart d) { return rotate(L.mate(d)); }

struct Region {
  int id = 0;
  std::vector<Dart> corners;            // face orbit, starting at its smallest dart
  std::vector<int> boundary_crossings;  // crossing of each corner, with multiplicity
  int gon() const { return static_cast<int>(corners.size()); }
};

struct RegionSet {
  std::vector<Region> regions;    // ordered by smallest dart
  std::vector<int> region_of_dart;  // region id per dart index
  int size() const { return static_cast<int>(regions.size()); }
};

using GonCensus = std::map<int, int>;

struct ValidationReport {
  bool is_valid = false;
  int crossing_count = 0;
  int face_count = 0;
  bool connected = false;
  std::vector<int> reducible_crossings;
  std::vector<std::string> messages;
};

// Number of face orbits of the rotation system (2 for the circle).
int count_faces(const LinkProjection& L);
bool is_connected(const LinkProjection& L);
// Number of link components (strands following slot s -> s+2).
int strand_count(const LinkProjection& L);

ValidationReport validate(const LinkProjection& L);

// Throws InvalidProjection unless validate(L).is_valid.
RegionSet regions(const LinkProjection& L);

GonCensus gon_census(const LinkProjection& L);

// 2*C2 + C3 - 8 - sum_{k>=5} (k-4)*C_k. Throws NotIrreducible, NotConnected,
// TrivialProjection when the hypotheses fail.
int ast_identity_residual(const LinkProjection& L);

enum class Color : std::uint8_t { black, white };
std::vector<Color> checkerboard(const LinkProjection& L);

std::vector<int> reducible_crossings(const LinkProjection& L);
inline bool is_irreducible(const LinkProjection& L) { return reducible_crossings(L).empty(); }

enum class SumMode { A, B };

// Cuts edge e1 of L1 and edge e2 of L2 and joins the loose ends crosswise.
// Mode A joins the lower dart of e1 to the lower dart of e2; mode B swaps.
LinkProjection connected_sum(const LinkProjection& L1, int e1, const LinkProjection& L2, int e2,
                             SumMode mode = SumMode::A);

// Canonical traversal code: minimal over starting darts (and reflections if
// allowed). Equal codes iff isomorphic rotation systems.
std::vector<int> canonical_code(const LinkProjection& L, bool allow_reflection = true);
// Projection rebuilt from canonical_code; to_pd() of it is the canonical PD string.
LinkProjection canonical_form(const LinkProjection& L, bool allow_reflection = true);
bool isomorphic(const LinkProjection& a, const LinkProjection& b, bool allow_reflection = true);

}  // namespace isoregion
