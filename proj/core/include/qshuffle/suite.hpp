#pragma once

// Whole-catalog verification sweep, optionally followed by the property
// checks.

#include <map>
#include <string>
#include <vector>

#include "qshuffle/checks.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

struct SweepOptions {
  /// Largest n for one-parameter families.
  unsigned bound1 = 4;
  /// Largest i + j for two-parameter families.
  unsigned bound2 = 3;
  /// Generating functions are compared through t^series_order.
  unsigned series_order = 8;
  /// Per-group override of bound1 / bound2, keyed by RelationFamily::group.
  std::map<std::string, unsigned> group_bounds;
  bool properties = true;
  unsigned jobs = 1;

  /// Bounds used by the acceptance criteria.
  static SweepOptions acceptance();
};

struct SweepResult {
  /// Sorted by id, then parameters.
  std::vector<VerificationReport> reports;
  std::vector<CheckResult> checks;
  double millis = 0.0;

  bool pass() const;
  std::size_t failures() const;
};

/// Generating-function families contribute one report each (params
/// {series_order}) instead of one per power of t.
SweepResult verify_all(const SweepOptions& options);

}  // namespace qshuffle
