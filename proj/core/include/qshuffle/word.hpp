#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace qshuffle {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

constexpr char to_char(Letter a) { return a == Letter::X ? 'x' : 'y'; }
constexpr Letter other(Letter a) { return a == Letter::X ? Letter::Y : Letter::X; }

/// A word over {x, y}. Letters are packed one bit each (x = 0, y = 1),
/// least significant bit first; bits past size() are always zero.
/// Words up to 128 letters live inline.
class Word {
 public:
  using Limb = std::uint64_t;
  static constexpr std::size_t kLimbBits = 64;

  Word() = default;
  Word(std::initializer_list<Letter> letters);

  /// Literal grammar: a nonempty string over {x, y}, or "1" for the trivial
  /// word. Throws ParseError.
  static Word parse(std::string_view text);

  /// Word of the given length whose letter i is bit (length - 1 - i) of
  /// `bits`; i.e. the first letter is the most significant. length <= 64.
  static Word from_msb_bits(Limb bits, std::size_t length);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1U);
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size_ - 1]; }

  void push_back(Letter a);
  Word& operator+=(const Word& tail);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  /// Free-product power: the word repeated n times.
  Word power(unsigned n) const;
  Word substr(std::size_t pos, std::size_t len) const;
  std::size_t count(Letter a) const;

  /// Inverse of from_msb_bits. Requires size() <= 64.
  Limb to_msb_bits() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && a.limbs_ == b.limbs_;
  }
  /// Graded lexicographic: shorter words first, then x < y letterwise.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  boost::container::small_vector<Limb, 2> limbs_;
  std::size_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word letter_word(Letter a);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace qshuffle

template <>
struct std::hash<qshuffle::Word> {
  std::size_t operator()(const qshuffle::Word& w) const { return w.hash(); }
};
