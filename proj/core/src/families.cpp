#include "qshuffle/families.hpp"

#include <sstream>
#include <stdexcept>

#include "qshuffle/laurent.hpp"

namespace qshuffle {
namespace {

constexpr std::array<std::string_view, 4> kAltNames = {"Ghat", "G", "W-", "W+"};

struct DaShape {
  std::string_view name;
  std::string_view prefix;
  std::string_view block;
  std::string_view suffix;
};

// Indexed by DaFamily.
constexpr std::array<DaShape, 16> kDaShapes = {{
    {"XXYY_pow", "", "xxyy", ""},
    {"YYXX_pow", "", "yyxx", ""},
    {"XXYY_xx", "", "xxyy", "xx"},
    {"YYXX_yy", "", "yyxx", "yy"},
    {"xyy_XXYY", "xyy", "xxyy", ""},
    {"yxx_YYXX", "yxx", "yyxx", ""},
    {"x_YYXX", "x", "yyxx", ""},
    {"y_XXYY", "y", "xxyy", ""},
    {"XXYY_xxy", "", "xxyy", "xxy"},
    {"YYXX_yyx", "", "yyxx", "yyx"},
    {"XXYY_x", "", "xxyy", "x"},
    {"YYXX_y", "", "yyxx", "y"},
    {"x_YYXX_y", "x", "yyxx", "y"},
    {"y_XXYY_x", "y", "xxyy", "x"},
    {"xyy_XXYY_x", "xyy", "xxyy", "x"},
    {"yxx_YYXX_y", "yxx", "yyxx", "y"},
}};

const DaShape& shape(DaFamily f) { return kDaShapes[static_cast<std::size_t>(f)]; }

Word literal(std::string_view s) { return s.empty() ? Word{} : Word::parse(s); }

unsigned end_code(const Word& w) {
  const std::size_t n = w.size();
  return (static_cast<unsigned>(w[0]) << 3U) | (static_cast<unsigned>(w[1]) << 2U) |
         (static_cast<unsigned>(w[n - 2]) << 1U) | static_cast<unsigned>(w[n - 1]);
}

// (first two letters, last two letters) -> family, derived from the shapes.
const std::array<DaFamily, 16>& da_by_ends() {
  static const std::array<DaFamily, 16> table = [] {
    std::array<DaFamily, 16> t{};
    for (DaFamily f : kAllDaFamilies) t[end_code(doubly_alternating(f, 1))] = f;
    return t;
  }();
  return table;
}

}  // namespace

std::string_view name(AltFamily f) { return kAltNames[static_cast<std::size_t>(f)]; }

std::optional<AltFamily> parse_alt_family(std::string_view s) {
  if (s == "Ghat" || s == "GHat" || s == "ghat") return AltFamily::GHat;
  if (s == "G") return AltFamily::G;
  if (s == "W-" || s == "Wminus" || s == "WMinus") return AltFamily::WMinus;
  if (s == "W+" || s == "Wplus" || s == "WPlus") return AltFamily::WPlus;
  return std::nullopt;
}

Word alternating(AltFamily family, unsigned n) {
  static const Word xy = Word::parse("xy");
  static const Word yx = Word::parse("yx");
  switch (family) {
    case AltFamily::GHat:
      return xy.power(n);
    case AltFamily::G:
      return yx.power(n);
    case AltFamily::WMinus:
      return xy.power(n) + letter_word(Letter::X);
    case AltFamily::WPlus:
      if (n == 0) throw std::invalid_argument("W+ index must be >= 1 (W_0 = x is W- index 0)");
      return yx.power(n - 1) + letter_word(Letter::Y);
  }
  throw std::invalid_argument("unknown alternating family");
}

Word alternating_w(int k) {
  if (k <= 0) return alternating(AltFamily::WMinus, static_cast<unsigned>(-k));
  return alternating(AltFamily::WPlus, static_cast<unsigned>(k));
}

std::string_view name(DaFamily f) { return shape(f).name; }

std::optional<DaFamily> parse_da_family(std::string_view s) {
  for (DaFamily f : kAllDaFamilies)
    if (shape(f).name == s) return f;
  return std::nullopt;
}

Word doubly_alternating(DaFamily family, unsigned n) {
  const DaShape& s = shape(family);
  return literal(s.prefix) + literal(s.block).power(n) + literal(s.suffix);
}

Word doubly_alternating(std::string_view family, unsigned n) {
  auto f = parse_da_family(family);
  if (!f) throw std::invalid_argument("unknown doubly alternating family '" + std::string(family) + "'");
  return doubly_alternating(*f, n);
}

Word WordClass::reconstruct() const {
  using namespace word_class;
  return std::visit(
      [](const auto& k) -> Word {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return {};
        } else if constexpr (std::is_same_v<T, LetterPower>) {
          return letter_word(k.letter).power(k.n);
        } else if constexpr (std::is_same_v<T, Alternating>) {
          return alternating(k.family, k.n);
        } else if constexpr (std::is_same_v<T, DoublyAlternating>) {
          return doubly_alternating(k.family, k.n);
        } else {
          throw std::logic_error("a word outside U has no family description");
        }
      },
      kind_);
}

std::string WordClass::to_string() const {
  using namespace word_class;
  std::ostringstream os;
  std::visit(
      [&os](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          os << "trivial";
        } else if constexpr (std::is_same_v<T, LetterPower>) {
          os << "power " << to_char(k.letter) << '^' << k.n;
        } else if constexpr (std::is_same_v<T, Alternating>) {
          switch (k.family) {
            case AltFamily::GHat: os << "alternating Ghat_" << k.n; break;
            case AltFamily::G: os << "alternating G_" << k.n; break;
            case AltFamily::WMinus: os << "alternating W_" << (k.n == 0 ? "" : "-") << k.n; break;
            case AltFamily::WPlus: os << "alternating W_" << k.n; break;
          }
        } else if constexpr (std::is_same_v<T, DoublyAlternating>) {
          os << "doubly-alternating " << name(k.family) << " n=" << k.n;
        } else {
          os << "not-in-U at " << k.offset << ": " << k.segment;
        }
      },
      kind_);
  return os.str();
}

const std::array<Word, 8>& forbidden_segments() {
  static const std::array<Word, 8> segs = {
      Word::parse("xxxy"), Word::parse("xxyx"), Word::parse("xyxx"), Word::parse("yxxx"),
      Word::parse("yyyx"), Word::parse("yyxy"), Word::parse("yxyy"), Word::parse("xyyy"),
  };
  return segs;
}

WordClass classify(const Word& w) {
  using namespace word_class;
  const std::size_t len = w.size();

  // Forbidden segments as 4-bit codes (first letter most significant).
  static const std::array<bool, 16> forbidden = [] {
    std::array<bool, 16> f{};
    for (const Word& s : forbidden_segments()) f[s.to_msb_bits()] = true;
    return f;
  }();
  if (len >= 4) {
    unsigned window = 0;
    for (std::size_t i = 0; i < len; ++i) {
      window = ((window << 1U) | static_cast<unsigned>(w[i])) & 0xFU;
      if (i >= 3 && forbidden[window]) return WordClass(NotInU{i - 3, w.substr(i - 3, 4)});
    }
  }

  if (len == 0) return WordClass(Trivial{});
  const std::size_t ys = w.count(Letter::Y);
  if (ys == 0) return WordClass(LetterPower{Letter::X, static_cast<unsigned>(len)});
  if (ys == len) return WordClass(LetterPower{Letter::Y, static_cast<unsigned>(len)});

  bool has_double = false;
  for (std::size_t i = 1; i < len && !has_double; ++i) has_double = w[i] == w[i - 1];

  if (!has_double) {
    const auto half = static_cast<unsigned>(len / 2);
    if (w.front() == Letter::X && w.back() == Letter::Y) return WordClass(Alternating{AltFamily::GHat, half});
    if (w.front() == Letter::Y && w.back() == Letter::X) return WordClass(Alternating{AltFamily::G, half});
    if (w.front() == Letter::X) return WordClass(Alternating{AltFamily::WMinus, half});
    return WordClass(Alternating{AltFamily::WPlus, half + 1});
  }

  const DaFamily family = da_by_ends()[end_code(w)];
  const DaShape& s = shape(family);
  const std::size_t fixed = s.prefix.size() + s.suffix.size();
  WordClass result(DoublyAlternating{family, static_cast<unsigned>((len - fixed) / 4)});
  if (len < fixed || (len - fixed) % 4 != 0 || result.reconstruct() != w)
    throw std::logic_error("word " + w.to_string() + " avoids every forbidden segment but matches no family");
  return result;
}

std::array<FreeElement, 2> serre_generators() {
  const LaurentInt three = q_int(3);
  auto gen = [&](Letter a) {
    const Letter b = other(a);
    FreeElement g(Word{a, a, a, b});
    g -= FreeElement(three, Word{a, a, b, a});
    g += FreeElement(three, Word{a, b, a, a});
    g -= FreeElement(Word{b, a, a, a});
    return g;
  };
  return {gen(Letter::X), gen(Letter::Y)};
}

namespace {

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits)
    out.push_back(Word::from_msb_bits(bits, length));
  return out;
}

}  // namespace

std::vector<FreeElement> span_J_degree(std::size_t d) {
  std::vector<FreeElement> span;
  if (d < 4) return span;
  const auto gens = serre_generators();
  for (std::size_t left = 0; left <= d - 4; ++left) {
    const auto lefts = all_words(left);
    const auto rights = all_words(d - 4 - left);
    for (const Word& a : lefts)
      for (const Word& b : rights)
        for (const FreeElement& g : gens)
          span.push_back(free_mul(free_mul(FreeElement(a), g), FreeElement(b)));
  }
  return span;
}

bool in_U_by_orthogonality(const Word& w, const std::vector<FreeElement>& span) {
  const FreeElement v(w);
  for (const FreeElement& s : span)
    if (!bilinear_form(v, s).is_zero()) return false;
  return true;
}

bool in_U_by_orthogonality(const Word& w) { return in_U_by_orthogonality(w, span_J_degree(w.size())); }

}  // namespace qshuffle
