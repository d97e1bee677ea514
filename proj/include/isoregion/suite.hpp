#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoregion/census.hpp"
#include "isoregion/pdcode.hpp"

namespace isoregion {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Isolated-set polynomials of T(2,1)..T(2,12) as published.
const std::vector<std::vector<std::int64_t>>& published_torus_polynomials();

// Exhaustive warping-degree checks over every diagram on the given knot
// shadows. Shadows with more than one strand are skipped.
std::map<std::string, CheckTally> warping_suite(const std::vector<LinkProjection>& shadows);

struct SuiteOptions {
  int max_c = 4;
  bool extended = false;
  int torus_max = 24;
  // Perturbs one published coefficient to exercise the failure path.
  std::optional<int> inject_fault_torus;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  int failed_count() const;
  bool ok() const { return failed_count() == 0; }
};

SuiteReport verify_paper_suite(const SuiteOptions& options = {});

}  // namespace isoregion
