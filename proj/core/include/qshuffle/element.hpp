#pragma once

// Finitely supported linear combinations of words with Laurent coefficients:
// the underlying vector space of the q-shuffle algebra.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qshuffle/laurent.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

class FreeElement {
 public:
  using Map = std::unordered_map<Word, LaurentInt, WordHash>;

  FreeElement() = default;
  explicit FreeElement(const Word& w) { terms_.emplace(w, LaurentInt(1)); }
  FreeElement(LaurentInt coeff, const Word& w);

  static FreeElement one() { return FreeElement(Word{}); }
  static FreeElement scalar(LaurentInt c) { return FreeElement(std::move(c), Word{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentInt coefficient(const Word& w) const;

  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  /// Terms in graded lexicographic word order.
  std::vector<std::pair<Word, LaurentInt>> sorted_terms() const;

  /// The common (#x, #y) of every support word, if there is one.
  std::optional<std::pair<std::size_t, std::size_t>> bidegree() const;
  bool is_homogeneous(std::size_t xs, std::size_t ys) const;

  void add_term(const Word& w, const LaurentInt& c);
  void add_term(Word&& w, LaurentInt&& c);
  void reserve(std::size_t n) { terms_.reserve(n); }

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(const LaurentInt& c);

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator-(FreeElement a) { return a *= LaurentInt(-1); }
  friend FreeElement operator*(const LaurentInt& c, FreeElement a) { return a *= c; }
  friend FreeElement operator*(FreeElement a, const LaurentInt& c) { return a *= c; }

  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Concatenation product of the free algebra, extended bilinearly.
FreeElement free_mul(const FreeElement& u, const FreeElement& v);

/// The bilinear form for which the words are orthonormal.
LaurentInt bilinear_form(const FreeElement& u, const FreeElement& v);

enum class Side { Left, Right };

/// Left: strips a leading `letter` (x^-1 v); Right: strips a trailing one
/// (v x^-1). Words not starting/ending with `letter`, and the trivial word,
/// map to zero.
FreeElement truncate(Side side, Letter letter, const FreeElement& v);

/// Text form, e.g. "(q^2 + 1)*xxy + xyx"; "0" for the zero element.
std::string to_string(const FreeElement& v);
std::ostream& operator<<(std::ostream& os, const FreeElement& v);

/// Parses element text. Juxtaposition and '*' are the free product; '^n'
/// raises to a free power (negative powers only for q). Throws ParseError.
FreeElement parse_element(std::string_view text);

}  // namespace qshuffle
