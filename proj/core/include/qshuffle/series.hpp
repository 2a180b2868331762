#pragma once

// Formal power series in t with element coefficients, kept only up to a
// fixed order, and the generating-function identities built from them.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/families.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

/// Coefficients of t^0 .. t^order. Products of two order-N series are
/// order N; nothing beyond t^N is ever computed.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order = 0) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument on an empty vector.
  explicit TruncatedSeries(std::vector<FreeElement> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const FreeElement& operator[](unsigned m) const { return coeffs_.at(m); }
  FreeElement& operator[](unsigned m) { return coeffs_.at(m); }
  const std::vector<FreeElement>& coefficients() const { return coeffs_; }

  /// Total number of (word, power of t) terms.
  std::size_t term_count() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<FreeElement> coeffs_;
};

/// Ghat(t) = sum Ghat_k t^k, G(t) = sum G_k t^k, W-(t) = sum W_{-k} t^k,
/// W+(t) = sum W_{k+1} t^k. WMinus and WPlus name W- and W+ here.
TruncatedSeries build_series(AltFamily name, unsigned order);

/// s(-t): negates the odd coefficients.
TruncatedSeries substitute_neg_t(const TruncatedSeries& s);

/// Cauchy product with the q-shuffle on coefficients. Throws
/// std::invalid_argument when the orders differ.
TruncatedSeries star_series(const TruncatedSeries& a, const TruncatedSeries& b);

/// "c0 + (c1)*t + (c2)*t^2"; zero coefficients are skipped, "0" if all are.
std::string to_string(const TruncatedSeries& s);

struct SeriesIdentity {
  std::string id;
  std::string formula;
  std::string note;
  /// The product of two generating functions, truncated at `order`.
  std::function<TruncatedSeries(unsigned order)> lhs;
  /// Closed-form coefficient of t^m on the right.
  std::function<FreeElement(unsigned m)> rhs_coefficient;

  TruncatedSeries rhs(unsigned order) const;
};

const std::vector<SeriesIdentity>& series_identities();

/// Throws UnknownIdentity.
const SeriesIdentity& find_series_identity(std::string_view id);

/// Compares both sides through t^order. On failure, difference holds the
/// coefficient of the lowest differing power and t_power names it. params
/// is {order}.
VerificationReport verify_series_identity(std::string_view id, unsigned order);

}  // namespace qshuffle
