#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoregion/pdcode.hpp"
#include "isoregion/regiongraph.hpp"

namespace isoregion {

struct CensusConfig {
  int max_crossings = 4;
  bool dedup = false;
  bool knots_only = false;
  // Five crossings is opt-in; anything larger raises LimitExceeded.
  bool extended = false;
  // Identify mirror images under dedup.
  bool identify_reflections = true;
};

inline constexpr int census_supported_crossings = 4;
inline constexpr int census_extended_crossings = 5;

// Connected spherical projections with 0..max_crossings crossings, the circle
// first. Within each crossing count the stream is sorted by canonical code when
// dedup is on, and follows the search order otherwise. Deterministic.
std::vector<LinkProjection> enumerate_projections(const CensusConfig& cfg);

// Visits the projections with exactly c crossings (c >= 1) in search order.
// Crossings are numbered in discovery order from crossing 0 and each newly
// reached crossing is entered through slot 0, which covers every isomorphism class.
void for_each_rotation_system(int c, const std::function<void(const LinkProjection&)>& visit);

struct CheckTally {
  int passed = 0;
  int failed = 0;
};

struct CensusRecord {
  std::string pd;
  int c = 0;
  int strands = 0;
  bool connected = true;
  bool irreducible = true;
  int isolate = 0;
  std::optional<int> independent_region;
  IGenPolynomial igen;
  GonCensus gons;
  std::vector<std::string> passed;
  std::vector<std::string> failed;
};

struct CensusReport {
  std::vector<CensusRecord> records;
  std::map<std::string, CheckTally> checks;
  std::vector<std::string> failures;  // "<check>: <pd>"

  int failed_count() const { return static_cast<int>(failures.size()); }
};

// Runs every per-projection property check whose hypotheses hold.
CensusRecord census_record(const LinkProjection& L);

// Property suite over the deduplicated census up to max_c crossings.
CensusReport corpus_property_suite(int max_c, bool extended = false);

struct ClassificationReport {
  std::vector<std::string> isolate_one;  // PD codes (empty string for the circle)
  std::vector<std::string> missing;      // expected shapes not found with isolate number one
  std::vector<std::string> unexpected;   // isolate number one but not an expected shape
  int four_plus_checked = 0;
  int four_plus_violations = 0;
  int reducible_checked = 0;
  int reducible_violations = 0;
  bool ok = false;
};

// Isolate number one occurs exactly for the (2,n) torus shapes, n = 0..3.
ClassificationReport verify_isolate_one_classification(int max_c, bool extended = false);

}  // namespace isoregion
