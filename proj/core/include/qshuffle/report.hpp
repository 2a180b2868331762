#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qshuffle/element.hpp"

namespace qshuffle {

/// Outcome of checking one identity instance. pass holds exactly when
/// difference (lhs - rhs) is the zero element.
struct VerificationReport {
  std::string id;
  std::vector<unsigned> params;
  bool pass = false;
  FreeElement difference;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  double millis = 0.0;
  /// Series identities only: the lowest power of t at which the sides differ.
  std::optional<unsigned> t_power;
};

}  // namespace qshuffle
