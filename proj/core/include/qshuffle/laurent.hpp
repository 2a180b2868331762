#pragma once

// Laurent polynomials in q with arbitrary-precision integer coefficients.
// This is the scalar ring Z[q, q^-1] used for every coefficient in the library.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qshuffle {

using BigInt = boost::multiprecision::cpp_int;

class LaurentInt {
 public:
  struct Term {
    int exponent;
    BigInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentInt() = default;
  LaurentInt(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentInt(const BigInt& constant);

  static LaurentInt monomial(int exponent, BigInt coeff = 1);

  /// Terms in increasing exponent order; never holds a zero coefficient.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Requires !is_zero().
  int min_exponent() const { return terms_.front().exponent; }
  int max_exponent() const { return terms_.back().exponent; }
  const BigInt& leading_coeff() const { return terms_.back().coeff; }

  BigInt coefficient(int exponent) const;
  BigInt eval_at_one() const;

  /// Multiplication by q^k.
  LaurentInt shifted(int k) const;

  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend LaurentInt operator-(LaurentInt a);

  friend bool operator==(const LaurentInt&, const LaurentInt&) = default;

  /// Adds coeff * q^exponent in place; used by accumulation loops.
  void add_monomial(int exponent, const BigInt& coeff);

 private:
  void merge(const LaurentInt& other, bool subtract);

  std::vector<Term> terms_;
};

LaurentInt q_power(int k);

/// The q-integer [n]_q = (q^n - q^-n) / (q - q^-1), expanded.
LaurentInt q_int(int n);

LaurentInt pow(const LaurentInt& base, unsigned exponent);

inline LaurentInt neg(const LaurentInt& a) { return -a; }
inline BigInt eval_at_one(const LaurentInt& a) { return a.eval_at_one(); }

/// Renders terms in decreasing exponent order, e.g. "q^2 + 1 + q^-2" or
/// "-(q + q^-1)".
std::string to_string(const LaurentInt& a);
std::ostream& operator<<(std::ostream& os, const LaurentInt& a);

/// Parses the rendering grammar (and any expression over integers, q,
/// parentheses, +, -, * and integer powers). Throws ParseError.
LaurentInt parse_laurent(std::string_view text);

}  // namespace qshuffle
