#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace qshuffle {

LaurentInt::LaurentInt(long long constant) {
  if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentInt::LaurentInt(const BigInt& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentInt LaurentInt::monomial(int exponent, BigInt coeff) {
  LaurentInt r;
  if (coeff != 0) r.terms_.push_back({exponent, std::move(coeff)});
  return r;
}

bool LaurentInt::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff == 1;
}

BigInt LaurentInt::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

BigInt LaurentInt::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& t : terms_) sum += t.coeff;
  return sum;
}

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt r = *this;
  for (auto& t : r.terms_) t.exponent += k;
  return r;
}

void LaurentInt::merge(const LaurentInt& other, bool subtract) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      out.push_back({b->exponent, subtract ? BigInt(-b->coeff) : b->coeff});
      ++b;
    } else {
      BigInt c = subtract ? BigInt(a->coeff - b->coeff) : BigInt(a->coeff + b->coeff);
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  merge(other, false);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
  merge(other, true);
  return *this;
}

void LaurentInt::add_monomial(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{exponent, coeff});
  }
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial() && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exponent);
  if (b.is_monomial() && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exponent);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) dense[s.exponent + t.exponent - lo] += s.coeff * t.coeff;
  std::vector<LaurentInt::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) terms.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  LaurentInt r;
  r.terms_ = std::move(terms);
  return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) {
  *this = *this * other;
  return *this;
}

LaurentInt operator-(LaurentInt a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

LaurentInt q_power(int k) { return LaurentInt::monomial(k, 1); }

LaurentInt q_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -q_int(-n);
  LaurentInt r;
  for (int e = 1 - n; e <= n - 1; e += 2) r.add_monomial(e, 1);
  return r;
}

LaurentInt pow(const LaurentInt& base, unsigned exponent) {
  LaurentInt result = 1;
  LaurentInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

namespace {

// |coeff| * q^exponent with no sign.
void write_magnitude(std::ostream& os, const BigInt& abs_coeff, int exponent) {
  if (exponent == 0) {
    os << abs_coeff;
    return;
  }
  if (abs_coeff != 1) os << abs_coeff;
  os << 'q';
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string to_string(const LaurentInt& a) {
  if (a.is_zero()) return "0";
  const auto& terms = a.terms();
  if (terms.size() > 1 && a.leading_coeff() < 0) return "-(" + to_string(-a) + ")";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = it->coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    write_magnitude(os, negative ? BigInt(-it->coeff) : it->coeff, it->exponent);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentInt& a) { return os << to_string(a); }

}  // namespace qshuffle
