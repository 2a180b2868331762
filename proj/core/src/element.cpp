#include "qshuffle/element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qshuffle {

FreeElement::FreeElement(LaurentInt coeff, const Word& w) {
  if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
}

LaurentInt FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentInt{} : it->second;
}

std::vector<std::pair<Word, LaurentInt>> FreeElement::sorted_terms() const {
  std::vector<std::pair<Word, LaurentInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> FreeElement::bidegree() const {
  std::optional<std::pair<std::size_t, std::size_t>> common;
  for (const auto& [w, c] : terms_) {
    std::pair<std::size_t, std::size_t> d{w.count(Letter::X), w.count(Letter::Y)};
    if (!common) {
      common = d;
    } else if (*common != d) {
      return std::nullopt;
    }
  }
  return common;
}

bool FreeElement::is_homogeneous(std::size_t xs, std::size_t ys) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.count(Letter::X) == xs && t.first.count(Letter::Y) == ys;
  });
}

void FreeElement::add_term(const Word& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreeElement::add_term(Word&& w, LaurentInt&& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const LaurentInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

FreeElement free_mul(const FreeElement& u, const FreeElement& v) {
  FreeElement r;
  r.reserve(u.size() * v.size());
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) r.add_term(a + b, ca * cb);
  return r;
}

LaurentInt bilinear_form(const FreeElement& u, const FreeElement& v) {
  const FreeElement& small = u.size() <= v.size() ? u : v;
  const FreeElement& large = u.size() <= v.size() ? v : u;
  LaurentInt sum;
  for (const auto& [w, c] : small) {
    LaurentInt d = large.coefficient(w);
    if (!d.is_zero()) sum += c * d;
  }
  return sum;
}

FreeElement truncate(Side side, Letter letter, const FreeElement& v) {
  FreeElement r;
  for (const auto& [w, c] : v) {
    if (w.empty()) continue;
    if (side == Side::Left && w.front() == letter) r.add_term(w.substr(1, w.size() - 1), c);
    if (side == Side::Right && w.back() == letter) r.add_term(w.substr(0, w.size() - 1), c);
  }
  return r;
}

namespace {

bool is_negative(const LaurentInt& c) { return c.leading_coeff() < 0; }

std::string render_term(const Word& w, const LaurentInt& magnitude, bool alone) {
  if (w.empty()) {
    if (alone || magnitude.is_monomial()) return to_string(magnitude);
    return "(" + to_string(magnitude) + ")";
  }
  if (magnitude.is_one()) return w.to_string();
  if (magnitude.is_monomial()) return to_string(magnitude) + "*" + w.to_string();
  return "(" + to_string(magnitude) + ")*" + w.to_string();
}

}  // namespace

std::string to_string(const FreeElement& v) {
  if (v.is_zero()) return "0";
  const auto terms = v.sorted_terms();
  if (terms.size() == 1 && terms[0].first.empty()) return to_string(terms[0].second);
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    const bool negative = is_negative(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << render_term(w, negative ? -c : c, false);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FreeElement& v) { return os << to_string(v); }

}  // namespace qshuffle
