#include "qshuffle/series.hpp"

#include <chrono>
#include <stdexcept>

#include "qshuffle/errors.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {

TruncatedSeries::TruncatedSeries(std::vector<FreeElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least the t^0 coefficient");
}

std::size_t TruncatedSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.size();
  return n;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (unsigned m = 0; m <= order(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (unsigned m = 0; m <= order(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

TruncatedSeries build_series(AltFamily name, unsigned order) {
  TruncatedSeries s(order);
  for (unsigned k = 0; k <= order; ++k) {
    switch (name) {
      case AltFamily::GHat:
      case AltFamily::G:
      case AltFamily::WMinus:
        s[k] = FreeElement(alternating(name, k));
        break;
      case AltFamily::WPlus:
        s[k] = FreeElement(alternating(name, k + 1));
        break;
    }
  }
  return s;
}

TruncatedSeries substitute_neg_t(const TruncatedSeries& s) {
  TruncatedSeries r = s;
  for (unsigned m = 1; m <= r.order(); m += 2) r[m] = -r[m];
  return r;
}

TruncatedSeries star_series(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
  }
  TruncatedSeries r(a.order());
  for (unsigned m = 0; m <= a.order(); ++m)
    for (unsigned k = 0; k <= m; ++k) r[m] += shuffle(a[k], b[m - k]);
  return r;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (unsigned m = 0; m <= s.order(); ++m) {
    if (s[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += to_string(s[m]);
      continue;
    }
    out += "(" + to_string(s[m]) + ")*t";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries SeriesIdentity::rhs(unsigned order) const {
  TruncatedSeries r(order);
  for (unsigned m = 0; m <= order; ++m) r[m] = rhs_coefficient(m);
  return r;
}

namespace {

using E = FreeElement;

E da(std::string_view prefix, std::string_view block, unsigned n, std::string_view suffix = "") {
  Word w = prefix.empty() ? Word{} : Word::parse(prefix);
  w += Word::parse(block).power(n);
  if (!suffix.empty()) w += Word::parse(suffix);
  return E(w);
}

LaurentInt sign(unsigned n) { return n % 2 == 0 ? 1 : -1; }
LaurentInt two_pow(unsigned e) { return pow(q_int(2), e); }

// Which generating function, and whether it is evaluated at -t.
struct Factor {
  AltFamily family;
  bool negated;
};

std::function<TruncatedSeries(unsigned)> product(Factor a, Factor b) {
  return [a, b](unsigned order) {
    TruncatedSeries sa = build_series(a.family, order);
    TruncatedSeries sb = build_series(b.family, order);
    if (a.negated) sa = substitute_neg_t(sa);
    if (b.negated) sb = substitute_neg_t(sb);
    return star_series(sa, sb);
  };
}

// Coefficient of t^m from separate closed forms for m = 2n and m = 2n+1.
std::function<E(unsigned)> by_parity(std::function<E(unsigned)> even, std::function<E(unsigned)> odd) {
  return [even = std::move(even), odd = std::move(odd)](unsigned m) { return m % 2 == 0 ? even(m / 2) : odd(m / 2); };
}

E zero(unsigned) { return E{}; }

std::vector<SeriesIdentity> build_identities() {
  using F = AltFamily;
  std::vector<SeriesIdentity> out;
  auto add = [&](std::string id, std::string formula, Factor a, Factor b, std::function<E(unsigned)> even,
                 std::function<E(unsigned)> odd, std::string note = "") {
    out.push_back(SeriesIdentity{std::move(id), std::move(formula), std::move(note), product(a, b),
                                 by_parity(std::move(even), std::move(odd))});
  };

  // Even-power closed form (-1)^n [2]^{2n} w(n) with an optional q^e scalar
  // and extra [2].
  auto even_form = [](int q_exp, unsigned extra_two, std::function<E(unsigned)> word) {
    return [=](unsigned n) { return q_power(q_exp) * sign(n) * two_pow(2 * n + extra_two) * word(n); };
  };
  auto odd_form = [](int q_exp, std::function<E(unsigned)> word) {
    return [=](unsigned n) { return q_power(q_exp) * sign(n) * two_pow(2 * n + 1) * word(n); };
  };

  add("S6.1.1", "Ghat(-t) * Ghat(t) = sum_n (-1)^n [2]_q^{2n} (xxyy)^n t^{2n}", {F::GHat, true}, {F::GHat, false},
      even_form(0, 0, [](unsigned n) { return da("", "xxyy", n); }), zero);
  add("S6.1.2", "G(-t) * G(t) = sum_n (-1)^n [2]_q^{2n} (yyxx)^n t^{2n}", {F::G, true}, {F::G, false},
      even_form(0, 0, [](unsigned n) { return da("", "yyxx", n); }), zero);
  add("S6.1.3", "W-(-t) * W-(t) = sum_n (-1)^n q [2]_q^{2n+1} (xxyy)^n xx t^{2n}", {F::WMinus, true},
      {F::WMinus, false}, even_form(1, 1, [](unsigned n) { return da("", "xxyy", n, "xx"); }), zero);
  add("S6.1.4", "W+(-t) * W+(t) = sum_n (-1)^n q [2]_q^{2n+1} (yyxx)^n yy t^{2n}", {F::WPlus, true},
      {F::WPlus, false}, even_form(1, 1, [](unsigned n) { return da("", "yyxx", n, "yy"); }), zero);

  auto xxyy_x = [](unsigned n) { return da("", "xxyy", n, "x"); };
  auto xxyy_xxy = [](unsigned n) { return da("", "xxyy", n, "xxy"); };
  add("S6.2.1",
      "W-(-t) * Ghat(t) = sum_n (-1)^n [2]_q^{2n} (xxyy)^n x t^{2n} + q sum_n (-1)^n [2]_q^{2n+1} (xxyy)^n xxy t^{2n+1}",
      {F::WMinus, true}, {F::GHat, false}, even_form(0, 0, xxyy_x), odd_form(1, xxyy_xxy));
  add("S6.2.2",
      "Ghat(t) * W-(-t) = sum_n (-1)^n [2]_q^{2n} (xxyy)^n x t^{2n} + q^-1 sum_n (-1)^n [2]_q^{2n+1} (xxyy)^n xxy t^{2n+1}",
      {F::GHat, false}, {F::WMinus, true}, even_form(0, 0, xxyy_x), odd_form(-1, xxyy_xxy));

  auto x_yyxx = [](unsigned n) { return da("x", "yyxx", n); };
  auto yxx_yyxx = [](unsigned n) { return da("yxx", "yyxx", n); };
  add("S6.3.1",
      "W-(-t) * G(t) = sum_n (-1)^n [2]_q^{2n} x(yyxx)^n t^{2n} + q^-1 sum_n (-1)^n [2]_q^{2n+1} yxx(yyxx)^n t^{2n+1}",
      {F::WMinus, true}, {F::G, false}, even_form(0, 0, x_yyxx), odd_form(-1, yxx_yyxx));
  add("S6.3.2",
      "G(t) * W-(-t) = sum_n (-1)^n [2]_q^{2n} x(yyxx)^n t^{2n} + q sum_n (-1)^n [2]_q^{2n+1} yxx(yyxx)^n t^{2n+1}",
      {F::G, false}, {F::WMinus, true}, even_form(0, 0, x_yyxx), odd_form(1, yxx_yyxx));

  auto y_xxyy = [](unsigned n) { return da("y", "xxyy", n); };
  auto xyy_xxyy = [](unsigned n) { return da("xyy", "xxyy", n); };
  add("S6.4.1",
      "W+(-t) * Ghat(t) = sum_n (-1)^n [2]_q^{2n} y(xxyy)^n t^{2n} + q^-1 sum_n (-1)^n [2]_q^{2n+1} xyy(xxyy)^n t^{2n+1}",
      {F::WPlus, true}, {F::GHat, false}, even_form(0, 0, y_xxyy), odd_form(-1, xyy_xxyy));
  add("S6.4.2",
      "Ghat(t) * W+(-t) = sum_n (-1)^n [2]_q^{2n} y(xxyy)^n t^{2n} + q sum_n (-1)^n [2]_q^{2n+1} xyy(xxyy)^n t^{2n+1}",
      {F::GHat, false}, {F::WPlus, true}, even_form(0, 0, y_xxyy), odd_form(1, xyy_xxyy));

  auto yyxx_y = [](unsigned n) { return da("", "yyxx", n, "y"); };
  auto yyxx_yyx = [](unsigned n) { return da("", "yyxx", n, "yyx"); };
  add("S6.5.1",
      "W+(-t) * G(t) = sum_n (-1)^n [2]_q^{2n} (yyxx)^n y t^{2n} + q sum_n (-1)^n [2]_q^{2n+1} (yyxx)^n yyx t^{2n+1}",
      {F::WPlus, true}, {F::G, false}, even_form(0, 0, yyxx_y), odd_form(1, yyxx_yyx));
  add("S6.5.2",
      "G(t) * W+(-t) = sum_n (-1)^n [2]_q^{2n} (yyxx)^n y t^{2n} + q^-1 sum_n (-1)^n [2]_q^{2n+1} (yyxx)^n yyx t^{2n+1}",
      {F::G, false}, {F::WPlus, true}, even_form(0, 0, yyxx_y), odd_form(-1, yyxx_yyx),
      "odd word corrected to (yyxx)^n yyx");

  // The even closed form is stated for n >= 1; the t^0 coefficient is G_0 * Ghat_0 = 1.
  auto mixed_even = [](int qa, int qb) {
    return [=](unsigned n) {
      if (n == 0) return E::one();
      return sign(n) * two_pow(2 * n - 1) *
             (q_power(qa) * da("xyy", "xxyy", n - 1, "x") + q_power(qb) * da("y", "xxyy", n - 1, "xxy"));
    };
  };
  auto mixed_odd = [](unsigned n) {
    return sign(n) * two_pow(2 * n) * (da("x", "yyxx", n, "y") - da("y", "xxyy", n, "x"));
  };
  const std::string t0_note = "t^0 coefficient taken as 1; the closed form is stated for n >= 1";
  add("S6.6.1",
      "G(-t) * Ghat(t) = sum_{n>=1} (-1)^n [2]_q^{2n-1} (q^-1 xyy(xxyy)^(n-1) x + q y(xxyy)^(n-1) xxy) t^{2n}"
      " + sum_n (-1)^n [2]_q^{2n} (x(yyxx)^n y - y(xxyy)^n x) t^{2n+1}",
      {F::G, true}, {F::GHat, false}, mixed_even(-1, 1), mixed_odd, t0_note);
  add("S6.6.2",
      "Ghat(t) * G(-t) = sum_{n>=1} (-1)^n [2]_q^{2n-1} (q xyy(xxyy)^(n-1) x + q^-1 y(xxyy)^(n-1) xxy) t^{2n}"
      " + sum_n (-1)^n [2]_q^{2n} (x(yyxx)^n y - y(xxyy)^n x) t^{2n+1}",
      {F::GHat, false}, {F::G, true}, mixed_even(1, -1), mixed_odd, t0_note);

  auto ww_even = [](int qa, int qb) {
    return [=](unsigned n) {
      return sign(n) * two_pow(2 * n) * (q_power(qa) * da("x", "yyxx", n, "y") + q_power(qb) * da("y", "xxyy", n, "x"));
    };
  };
  auto ww_odd = [](unsigned n) {
    return q_power(-1) * sign(n) * two_pow(2 * n + 1) * (da("xyy", "xxyy", n, "x") - da("yxx", "yyxx", n, "y"));
  };
  add("S6.7.1",
      "W+(-t) * W-(t) = sum_n (-1)^n [2]_q^{2n} (q^-2 x(yyxx)^n y + y(xxyy)^n x) t^{2n}"
      " + q^-1 sum_n (-1)^n [2]_q^{2n+1} (xyy(xxyy)^n x - yxx(yyxx)^n y) t^{2n+1}",
      {F::WPlus, true}, {F::WMinus, false}, ww_even(-2, 0), ww_odd);
  add("S6.7.2",
      "W-(t) * W+(-t) = sum_n (-1)^n [2]_q^{2n} (x(yyxx)^n y + q^-2 y(xxyy)^n x) t^{2n}"
      " + q^-1 sum_n (-1)^n [2]_q^{2n+1} (xyy(xxyy)^n x - yxx(yyxx)^n y) t^{2n+1}",
      {F::WMinus, false}, {F::WPlus, true}, ww_even(0, -2), ww_odd);
  return out;
}

}  // namespace

const std::vector<SeriesIdentity>& series_identities() {
  static const std::vector<SeriesIdentity> all = build_identities();
  return all;
}

const SeriesIdentity& find_series_identity(std::string_view id) {
  for (const auto& s : series_identities())
    if (s.id == id) return s;
  throw UnknownIdentity(std::string(id));
}

VerificationReport verify_series_identity(std::string_view id, unsigned order) {
  const auto start = std::chrono::steady_clock::now();
  const SeriesIdentity& ident = find_series_identity(id);
  const TruncatedSeries lhs = ident.lhs(order);
  const TruncatedSeries rhs = ident.rhs(order);
  VerificationReport report;
  report.id = ident.id;
  report.params = {order};
  report.lhs_terms = lhs.term_count();
  report.rhs_terms = rhs.term_count();
  report.pass = true;
  for (unsigned m = 0; m <= order; ++m) {
    FreeElement d = lhs[m] - rhs[m];
    if (!d.is_zero()) {
      report.pass = false;
      report.t_power = m;
      report.difference = std::move(d);
      break;
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qshuffle
