#include "qshuffle/shuffle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qshuffle {
namespace {

// Packed engine for |u| + |v| <= 64. A cell holds u[i:] * v[j:] as sorted
// keys (the word's letters as bits, first letter most significant), each
// with a run of (exponent, count) monomials sorted by exponent. Counts are
// bounded by C(64, 32) < 2^63, so uint64 is exact.

struct Mono {
  std::int32_t exponent;
  std::uint64_t count;
};

struct Cell {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint32_t> offsets{0};
  std::vector<Mono> monos;

  std::size_t size() const { return keys.size(); }

  void close_key(std::uint64_t key) {
    keys.push_back(key);
    offsets.push_back(static_cast<std::uint32_t>(monos.size()));
  }

  void reserve(std::size_t nkeys, std::size_t nmonos) {
    keys.reserve(nkeys);
    offsets.reserve(nkeys + 1);
    monos.reserve(nmonos);
  }
};

Cell single_word_cell(std::uint64_t key) {
  Cell c;
  c.monos.push_back({0, 1});
  c.close_key(key);
  return c;
}

void append_entry(Cell& out, const Cell& src, std::size_t idx, std::uint64_t prefix, int shift) {
  for (std::uint32_t m = src.offsets[idx]; m < src.offsets[idx + 1]; ++m)
    out.monos.push_back({src.monos[m].exponent + shift, src.monos[m].count});
  out.close_key(src.keys[idx] | prefix);
}

void append_all(Cell& out, const Cell& src, std::uint64_t prefix, int shift) {
  for (std::size_t i = 0; i < src.size(); ++i) append_entry(out, src, i, prefix, shift);
}

// Entries of `a` (unshifted) and `b` (shifted) share a key: merge the runs.
void append_merged(Cell& out, const Cell& a, std::size_t ia, const Cell& b, std::size_t ib,
                   std::uint64_t prefix, int shift) {
  std::uint32_t p = a.offsets[ia];
  std::uint32_t q = b.offsets[ib];
  const std::uint32_t pe = a.offsets[ia + 1];
  const std::uint32_t qe = b.offsets[ib + 1];
  while (p < pe || q < qe) {
    if (q == qe || (p < pe && a.monos[p].exponent < b.monos[q].exponent + shift)) {
      out.monos.push_back(a.monos[p++]);
    } else if (p == pe || b.monos[q].exponent + shift < a.monos[p].exponent) {
      out.monos.push_back({b.monos[q].exponent + shift, b.monos[q].count});
      ++q;
    } else {
      out.monos.push_back({a.monos[p].exponent, a.monos[p].count + b.monos[q].count});
      ++p;
      ++q;
    }
  }
  out.close_key(a.keys[ia] | prefix);
}

// cell(i, j) = u_i cell(i+1, j) + q^shift v_j cell(i, j+1).
Cell combine(const Cell& down, Letter ui, const Cell& right, Letter vj, int shift, unsigned pos) {
  Cell out;
  out.reserve(down.size() + right.size(), down.monos.size() + right.monos.size());
  const std::uint64_t pu = static_cast<std::uint64_t>(ui) << pos;
  const std::uint64_t pv = static_cast<std::uint64_t>(vj) << pos;
  if (ui != vj) {
    // Distinct first letters: the two halves are disjoint and x sorts first.
    if (ui == Letter::X) {
      append_all(out, down, pu, 0);
      append_all(out, right, pv, shift);
    } else {
      append_all(out, right, pv, shift);
      append_all(out, down, pu, 0);
    }
    return out;
  }
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < down.size() || b < right.size()) {
    if (b == right.size() || (a < down.size() && down.keys[a] < right.keys[b])) {
      append_entry(out, down, a++, pu, 0);
    } else if (a == down.size() || right.keys[b] < down.keys[a]) {
      append_entry(out, right, b++, pv, shift);
    } else {
      append_merged(out, down, a++, right, b++, pu, shift);
    }
  }
  return out;
}

std::uint64_t suffix_key(const Word& w, std::size_t from) {
  std::uint64_t key = 0;
  for (std::size_t i = from; i < w.size(); ++i) key = (key << 1U) | static_cast<std::uint64_t>(w[i]);
  return key;
}

// suffix_weight[j][i] = <v_j, u_i> + ... + <v_j, u_{r-1}>.
std::vector<std::vector<int>> suffix_weights(const Word& u, const Word& v) {
  const std::size_t r = u.size();
  std::vector<std::vector<int>> w(v.size(), std::vector<int>(r + 1, 0));
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = r; i-- > 0;) w[j][i] = w[j][i + 1] + pairing(v[j], u[i]);
  return w;
}

FreeElement shuffle_packed(const Word& u, const Word& v) {
  const std::size_t r = u.size();
  const std::size_t s = v.size();
  const auto weight = suffix_weights(u, v);

  std::vector<Cell> below(s + 1);
  for (std::size_t j = 0; j <= s; ++j) below[j] = single_word_cell(suffix_key(v, j));

  for (std::size_t i = r; i-- > 0;) {
    std::vector<Cell> row(s + 1);
    row[s] = single_word_cell(suffix_key(u, i));
    for (std::size_t j = s; j-- > 0;) {
      const auto pos = static_cast<unsigned>((r - i) + (s - j) - 1);
      row[j] = combine(below[j], u[i], row[j + 1], v[j], weight[j][i], pos);
    }
    below = std::move(row);
  }

  const Cell& top = below[0];
  FreeElement result;
  result.reserve(top.size());
  for (std::size_t k = 0; k < top.size(); ++k) {
    LaurentInt coeff;
    for (std::uint32_t m = top.offsets[k]; m < top.offsets[k + 1]; ++m)
      coeff += LaurentInt::monomial(top.monos[m].exponent, BigInt(top.monos[m].count));
    result.add_term(Word::from_msb_bits(top.keys[k], r + s), std::move(coeff));
  }
  return result;
}

FreeElement prepend(Letter a, const FreeElement& v, int shift) {
  FreeElement r;
  r.reserve(v.size());
  const Word head = letter_word(a);
  for (const auto& [w, c] : v) r.add_term(head + w, shift == 0 ? c : c.shifted(shift));
  return r;
}

FreeElement append(const FreeElement& v, Letter a, int shift) {
  FreeElement r;
  r.reserve(v.size());
  for (const auto& [w, c] : v) {
    Word ext = w;
    ext.push_back(a);
    r.add_term(std::move(ext), shift == 0 ? LaurentInt(c) : c.shifted(shift));
  }
  return r;
}

}  // namespace

namespace detail {

FreeElement shuffle_general(const Word& u, const Word& v) {
  const std::size_t r = u.size();
  const std::size_t s = v.size();
  const auto weight = suffix_weights(u, v);

  std::vector<FreeElement> below(s + 1);
  for (std::size_t j = 0; j <= s; ++j) below[j] = FreeElement(v.substr(j, s - j));
  for (std::size_t i = r; i-- > 0;) {
    std::vector<FreeElement> row(s + 1);
    row[s] = FreeElement(u.substr(i, r - i));
    for (std::size_t j = s; j-- > 0;)
      row[j] = prepend(u[i], below[j], 0) + prepend(v[j], row[j + 1], weight[j][i]);
    below = std::move(row);
  }
  return below[0];
}

FreeElement shuffle_right_peel(const Word& u, const Word& v) {
  const std::size_t r = u.size();
  const std::size_t s = v.size();
  // prefix_weight[a][b] = <u_a, v_0> + ... + <u_a, v_{b-1}> (0-based a).
  std::vector<std::vector<int>> prefix_weight(r, std::vector<int>(s + 1, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < s; ++b) prefix_weight[a][b + 1] = prefix_weight[a][b] + pairing(u[a], v[b]);

  // memo[a][b] = u[:a] * v[:b]
  std::vector<std::vector<FreeElement>> memo(r + 1, std::vector<FreeElement>(s + 1));
  for (std::size_t a = 0; a <= r; ++a) memo[a][0] = FreeElement(u.substr(0, a));
  for (std::size_t b = 0; b <= s; ++b) memo[0][b] = FreeElement(v.substr(0, b));
  for (std::size_t a = 1; a <= r; ++a)
    for (std::size_t b = 1; b <= s; ++b)
      memo[a][b] = append(memo[a][b - 1], v[b - 1], 0) + append(memo[a - 1][b], u[a - 1], prefix_weight[a - 1][b]);
  return memo[r][s];
}

}  // namespace detail

FreeElement shuffle(const Word& u, const Word& v) {
  if (u.empty()) return FreeElement(v);
  if (v.empty()) return FreeElement(u);
  if (u.size() + v.size() <= 64) return shuffle_packed(u, v);
  return detail::shuffle_general(u, v);
}

FreeElement shuffle(const FreeElement& u, const FreeElement& v) {
  FreeElement result;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      const LaurentInt c = ca * cb;
      FreeElement part = shuffle(a, b);
      if (result.is_zero() && c.is_one()) {
        result = std::move(part);
      } else {
        part *= c;
        result += part;
      }
    }
  }
  return result;
}

FreeElement commutator_qk(const FreeElement& a, const FreeElement& b, int k) {
  FreeElement ab = shuffle(a, b);
  FreeElement ba = shuffle(b, a);
  if (k != 0) {
    ab *= q_power(k);
    ba *= q_power(-k);
  }
  ab -= ba;
  return ab;
}

FreeElement star_power(const FreeElement& a, unsigned n) {
  FreeElement r = FreeElement::one();
  for (unsigned i = 0; i < n; ++i) r = shuffle(r, a);
  return r;
}

FreeElement shuffle_oracle(const Word& u, const Word& v) {
  const std::size_t r = u.size();
  const std::size_t total = r + v.size();
  // from_u[p] == 1 when output position p takes the next letter of u.
  // Starting from the lexicographically smallest mask, next_permutation
  // walks every placement exactly once.
  std::vector<char> from_u(total, 0);
  std::fill(from_u.end() - static_cast<std::ptrdiff_t>(r), from_u.end(), 1);
  FreeElement result;
  do {
    Word w;
    int exponent = 0;
    std::size_t iu = 0;
    std::size_t iv = 0;
    std::size_t placed_vx = 0;
    std::size_t placed_vy = 0;
    for (std::size_t p = 0; p < total; ++p) {
      if (from_u[p] != 0) {
        const Letter a = u[iu++];
        exponent += pairing(a, Letter::X) * static_cast<int>(placed_vx) +
                    pairing(a, Letter::Y) * static_cast<int>(placed_vy);
        w.push_back(a);
      } else {
        const Letter b = v[iv++];
        (b == Letter::X ? placed_vx : placed_vy) += 1;
        w.push_back(b);
      }
    }
    result.add_term(w, q_power(exponent));
  } while (std::next_permutation(from_u.begin(), from_u.end()));
  return result;
}

}  // namespace qshuffle
