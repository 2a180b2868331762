#pragma once

// Catalog of identity families in the q-shuffle algebra. Each family builds
// its two sides as fully expanded elements for concrete natural-number
// parameters; verification checks lhs - rhs == 0 exactly.
//
// Identities carrying an inverse scalar such as (1 - q^-2)^-1 are stored
// multiplied through by that scalar, so every coefficient stays in
// Z[q, q^-1]. Equality chains a = b = c are stored as two entries.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

struct RelationSides {
  FreeElement lhs;
  FreeElement rhs;
};

struct RelationFamily {
  std::string id;
  /// 0 (no parameters), 1 (n) or 2 (i, j).
  unsigned arity = 0;
  /// Which batch of identities this belongs to, e.g. "letter-commutator".
  std::string group;
  /// The identity in ASCII notation.
  std::string formula;
  /// Clearing factors or corrections applied when encoding, if any.
  std::string note;
  std::function<RelationSides(std::span<const unsigned>)> build;
};

/// Every family, in catalog order.
const std::vector<RelationFamily>& list_families();

/// Throws UnknownIdentity.
const RelationFamily& find_family(std::string_view id);

/// Throws UnknownIdentity or std::invalid_argument on an arity mismatch.
RelationSides instantiate(std::string_view id, std::span<const unsigned> params);

VerificationReport verify(std::string_view id, std::span<const unsigned> params);

/// Parameter tuples n <= bound (arity 1) or i + j <= bound (arity 2), in
/// lexicographic order. Arity 0 yields the single empty tuple.
std::vector<std::vector<unsigned>> parameter_range(unsigned arity, unsigned bound);

/// verify over parameter_range; `jobs` > 1 spreads instances over threads.
/// Reports come back in parameter order.
std::vector<VerificationReport> verify_range(std::string_view id, unsigned bound, unsigned jobs = 1);

}  // namespace qshuffle
