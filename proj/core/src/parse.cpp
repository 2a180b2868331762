// Recursive-descent parser for coefficient and element text.
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'] power)*
//   power   := primary ['^' ['+'|'-'] integer]
//   primary := integer | 'q' | letters | '(' expr ')'
//
// Values are free-algebra elements; integers and q are scalars, so the
// coefficient grammar is the letter-free subset.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "qshuffle/element.hpp"
#include "qshuffle/errors.hpp"

namespace qshuffle {
namespace {

enum class Tok { Int, Q, Letters, LParen, RParen, Caret, Star, Plus, Minus, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  FreeElement parse_all() {
    FreeElement v = expr();
    if (cur_.kind != Tok::End) fail("unexpected token");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(cur_.kind == Tok::End ? "<end>" : cur_.text, cur_.pos, what);
  }

  void advance() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) ++at_;
    const std::size_t start = at_;
    if (at_ >= src_.size()) {
      cur_ = {Tok::End, start, ""};
      return;
    }
    const char c = src_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) ++at_;
      cur_ = {Tok::Int, start, std::string(src_.substr(start, at_ - start))};
      return;
    }
    if (c == 'x' || c == 'y') {
      while (at_ < src_.size() && (src_[at_] == 'x' || src_[at_] == 'y')) ++at_;
      cur_ = {Tok::Letters, start, std::string(src_.substr(start, at_ - start))};
      return;
    }
    ++at_;
    switch (c) {
      case 'q': cur_ = {Tok::Q, start, "q"}; return;
      case '(': cur_ = {Tok::LParen, start, "("}; return;
      case ')': cur_ = {Tok::RParen, start, ")"}; return;
      case '^': cur_ = {Tok::Caret, start, "^"}; return;
      case '*': cur_ = {Tok::Star, start, "*"}; return;
      case '+': cur_ = {Tok::Plus, start, "+"}; return;
      case '-': cur_ = {Tok::Minus, start, "-"}; return;
      default:
        cur_ = {Tok::End, start, std::string(1, c)};
        throw ParseError(cur_.text, start, "invalid character");
    }
  }

  static bool starts_primary(Tok t) {
    return t == Tok::Int || t == Tok::Q || t == Tok::Letters || t == Tok::LParen;
  }

  FreeElement expr() {
    bool negate = false;
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      negate = cur_.kind == Tok::Minus;
      advance();
    }
    FreeElement acc = product();
    if (negate) acc = -acc;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = cur_.kind == Tok::Minus;
      advance();
      FreeElement rhs = product();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  FreeElement product() {
    FreeElement acc = power();
    while (true) {
      if (cur_.kind == Tok::Star) {
        advance();
        acc = free_mul(acc, power());
      } else if (starts_primary(cur_.kind)) {
        acc = free_mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  // Returns c*q^k with c = +-1 when v is such a scalar.
  static std::optional<LaurentInt> unit_scalar(const FreeElement& v) {
    if (v.size() != 1) return std::nullopt;
    const auto& [w, c] = *v.begin();
    if (!w.empty() || !c.is_monomial()) return std::nullopt;
    const auto& coeff = c.terms()[0].coeff;
    if (coeff != 1 && coeff != -1) return std::nullopt;
    return c;
  }

  FreeElement power() {
    FreeElement base = primary();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    bool negative = false;
    if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      negative = cur_.kind == Tok::Minus;
      advance();
    }
    if (cur_.kind != Tok::Int) fail("expected integer exponent");
    unsigned long n = 0;
    try {
      n = std::stoul(cur_.text);
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
    if (n > 100000) fail("exponent out of range");
    if (negative) {
      auto unit = unit_scalar(base);
      if (!unit) fail("negative exponent on a non-invertible base");
      // (c q^k)^-n = c^n q^(-kn) since c = +-1.
      const auto& t = unit->terms()[0];
      advance();
      BigInt sign = (n % 2 == 1) ? t.coeff : BigInt(1);
      return FreeElement::scalar(LaurentInt::monomial(-t.exponent * static_cast<int>(n), sign));
    }
    advance();
    FreeElement r = FreeElement::one();
    for (unsigned long i = 0; i < n; ++i) r = free_mul(r, base);
    return r;
  }

  FreeElement primary() {
    switch (cur_.kind) {
      case Tok::Int: {
        BigInt value(cur_.text);
        advance();
        return FreeElement::scalar(LaurentInt(value));
      }
      case Tok::Q:
        advance();
        return FreeElement::scalar(q_power(1));
      case Tok::Letters: {
        Word w = Word::parse(cur_.text);
        advance();
        return FreeElement(w);
      }
      case Tok::LParen: {
        advance();
        FreeElement inner = expr();
        if (cur_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      default:
        fail("unexpected token");
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  Token cur_{Tok::End, 0, ""};
};

}  // namespace

FreeElement parse_element(std::string_view text) { return Parser(text).parse_all(); }

LaurentInt parse_laurent(std::string_view text) {
  FreeElement v = parse_element(text);
  LaurentInt c;
  for (const auto& [w, coeff] : v) {
    if (!w.empty()) {
      throw ParseError(w.to_string(), text.find_first_of("xy"), "coefficient contains letters");
    }
    c = coeff;
  }
  return c;
}

}  // namespace qshuffle
