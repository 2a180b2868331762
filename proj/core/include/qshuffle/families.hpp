#pragma once

// Named word families, the membership classifier for the subalgebra U
// generated by x and y, and an independent membership test by
// orthogonality against the ideal generated by the q-Serre elements.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

/// GHat_n = (xy)^n, G_n = (yx)^n, W_{-n} = (xy)^n x, W_n = (yx)^(n-1) y.
enum class AltFamily { GHat, G, WMinus, WPlus };

std::string_view name(AltFamily f);
std::optional<AltFamily> parse_alt_family(std::string_view s);

/// GHat and G accept n = 0 (the trivial word); WPlus rejects n = 0 with
/// std::invalid_argument because W_0 = x is indexed by WMinus.
Word alternating(AltFamily family, unsigned n);

/// Signed index: W(k) = W_{-|k|} for k <= 0 and W_k for k >= 1.
Word alternating_w(int k);

/// The sixteen doubly alternating families, keyed by their first two and
/// last two letters. Names spell the word with the repeated block in
/// capitals: XXYY_xx is (xxyy)^n xx, yxx_YYXX_y is yxx(yyxx)^n y.
enum class DaFamily {
  XXYY_pow, YYXX_pow, XXYY_xx, YYXX_yy,
  xyy_XXYY, yxx_YYXX, x_YYXX, y_XXYY,
  XXYY_xxy, YYXX_yyx, XXYY_x, YYXX_y,
  x_YYXX_y, y_XXYY_x, xyy_XXYY_x, yxx_YYXX_y,
};

inline constexpr std::array<DaFamily, 16> kAllDaFamilies = {
    DaFamily::XXYY_pow, DaFamily::YYXX_pow, DaFamily::XXYY_xx,    DaFamily::YYXX_yy,
    DaFamily::xyy_XXYY, DaFamily::yxx_YYXX, DaFamily::x_YYXX,     DaFamily::y_XXYY,
    DaFamily::XXYY_xxy, DaFamily::YYXX_yyx, DaFamily::XXYY_x,     DaFamily::YYXX_y,
    DaFamily::x_YYXX_y, DaFamily::y_XXYY_x, DaFamily::xyy_XXYY_x, DaFamily::yxx_YYXX_y,
};

std::string_view name(DaFamily f);
std::optional<DaFamily> parse_da_family(std::string_view s);

/// For the two pure powers the index is the exponent: XXYY_pow n is
/// (xxyy)^n. Every other family takes the n of its block exponent.
Word doubly_alternating(DaFamily family, unsigned n);
/// String-keyed overload; throws std::invalid_argument on an unknown name.
Word doubly_alternating(std::string_view family, unsigned n);

namespace word_class {

struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
struct LetterPower {
  Letter letter;
  unsigned n;
  friend bool operator==(const LetterPower&, const LetterPower&) = default;
};
struct Alternating {
  AltFamily family;
  unsigned n;
  friend bool operator==(const Alternating&, const Alternating&) = default;
};
struct DoublyAlternating {
  DaFamily family;
  unsigned n;
  friend bool operator==(const DoublyAlternating&, const DoublyAlternating&) = default;
};
struct NotInU {
  std::size_t offset;
  Word segment;
  friend bool operator==(const NotInU&, const NotInU&) = default;
};

}  // namespace word_class

class WordClass {
 public:
  using Kind = std::variant<word_class::Trivial, word_class::LetterPower, word_class::Alternating,
                            word_class::DoublyAlternating, word_class::NotInU>;

  explicit WordClass(Kind kind) : kind_(std::move(kind)) {}

  const Kind& kind() const { return kind_; }
  bool in_U() const { return !std::holds_alternative<word_class::NotInU>(kind_); }

  /// Rebuilds the word from (family, n). Not available for NotInU.
  Word reconstruct() const;

  /// E.g. "trivial", "power x^3", "alternating W_-2",
  /// "doubly-alternating XXYY_x n=1", "not-in-U at 0: xxyx".
  std::string to_string() const;

  friend bool operator==(const WordClass&, const WordClass&) = default;

 private:
  Kind kind_;
};

/// The eight length-4 segments whose presence excludes a word from U.
const std::array<Word, 8>& forbidden_segments();

/// Ties between overlapping short descriptions resolve in the order
/// trivial, letter power, alternating, doubly alternating.
WordClass classify(const Word& w);

/// The two q-Serre elements of the free algebra generating the ideal J.
std::array<FreeElement, 2> serre_generators();

/// Spanning set {a g b : |a| + |b| = d - 4, g a Serre generator} of the
/// degree-d part of J; empty for d < 4. Not deduplicated.
std::vector<FreeElement> span_J_degree(std::size_t d);

bool in_U_by_orthogonality(const Word& w);
/// Same test against a precomputed span_J_degree(w.size()).
bool in_U_by_orthogonality(const Word& w, const std::vector<FreeElement>& span);

}  // namespace qshuffle
