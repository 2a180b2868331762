#pragma once

// Property checks over the shuffle engine and the word classifier, each
// comparing against an independent oracle. Random cases use a fixed seed
// so every run checks the same inputs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qshuffle {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  /// First counterexample, empty on pass.
  std::string detail;
  double millis = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'0f'5a'ff1eULL;

/// classify(w).in_U() agrees with the orthogonality test against J, and
/// in-U classifications reconstruct w, for every word of length 1..max_length.
CheckResult check_classification(std::size_t max_length = 10);

/// shuffle == shuffle_oracle == right-peel form for all pairs with
/// |u| + |v| <= max_total.
CheckResult check_shuffle_exhaustive(std::size_t max_total = 10);

/// shuffle == shuffle_oracle on random pairs with |u| + |v| <= max_total.
CheckResult check_shuffle_random(std::size_t pairs = 1000, std::size_t max_total = 16,
                                 std::uint64_t seed = kDefaultSeed);

/// (a * b) * c == a * (b * c) on random words of length <= max_length.
CheckResult check_associativity(std::size_t triples = 200, std::size_t max_length = 4,
                                std::uint64_t seed = kDefaultSeed);

/// At q = 1 the coefficients of u * v sum to C(|u| + |v|, |u|).
CheckResult check_binomial(std::size_t pairs = 200, std::size_t max_total = 16, std::uint64_t seed = kDefaultSeed);

/// Every check above at its default size.
std::vector<CheckResult> run_property_checks();

}  // namespace qshuffle
