#include "qshuffle/word.hpp"

#include <bit>
#include <ostream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter a : letters) push_back(a);
}

Word Word::parse(std::string_view text) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError("", 0, "empty word literal");
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'x':
        w.push_back(Letter::X);
        break;
      case 'y':
        w.push_back(Letter::Y);
        break;
      default:
        throw ParseError(std::string(1, text[i]), i, "invalid letter in word literal");
    }
  }
  return w;
}

Word Word::from_msb_bits(Limb bits, std::size_t length) {
  Word w;
  w.size_ = length;
  if (length == 0) return w;
  // Reverse the low `length` bits so that letter 0 lands in bit 0.
  Limb rev = 0;
  for (std::size_t i = 0; i < length; ++i) rev |= ((bits >> (length - 1 - i)) & 1U) << i;
  w.limbs_.push_back(rev);
  return w;
}

Word::Limb Word::to_msb_bits() const {
  Limb bits = 0;
  const Limb low = limbs_.empty() ? 0 : limbs_[0];
  for (std::size_t i = 0; i < size_; ++i) bits |= ((low >> i) & 1U) << (size_ - 1 - i);
  return bits;
}

void Word::push_back(Letter a) {
  if (size_ % kLimbBits == 0) limbs_.push_back(0);
  if (a == Letter::Y) limbs_.back() |= Limb{1} << (size_ % kLimbBits);
  ++size_;
}

Word& Word::operator+=(const Word& tail) {
  const std::size_t shift = size_ % kLimbBits;
  if (shift == 0) {
    limbs_.insert(limbs_.end(), tail.limbs_.begin(), tail.limbs_.end());
  } else {
    for (Limb limb : tail.limbs_) {
      limbs_.back() |= limb << shift;
      limbs_.push_back(limb >> (kLimbBits - shift));
    }
  }
  size_ += tail.size_;
  limbs_.resize((size_ + kLimbBits - 1) / kLimbBits);
  return *this;
}

Word Word::power(unsigned n) const {
  Word r;
  for (unsigned i = 0; i < n; ++i) r += *this;
  return r;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word r;
  for (std::size_t i = pos; i < pos + len && i < size_; ++i) r.push_back((*this)[i]);
  return r;
}

std::size_t Word::count(Letter a) const {
  std::size_t ys = 0;
  for (Limb limb : limbs_) ys += static_cast<std::size_t>(std::popcount(limb));
  return a == Letter::Y ? ys : size_ - ys;
}

std::string Word::to_string() const {
  if (size_ == 0) return "1";
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
  return s;
}

std::size_t Word::hash() const {
  // splitmix64 finalizer applied to the length, then chained over the limbs.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(size_);
  for (Limb limb : limbs_) h = mix(h ^ limb);
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    const Word::Limb diff = a.limbs_[i] ^ b.limbs_[i];
    if (diff != 0) {
      const int bit = std::countr_zero(diff);
      // The word holding x (bit 0) at the first difference is smaller.
      return ((a.limbs_[i] >> bit) & 1U) == 0 ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word letter_word(Letter a) { return Word{a}; }

}  // namespace qshuffle
