#include "qshuffle/checks.hpp"

#include <chrono>
#include <random>

#include "qshuffle/families.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Word word_from_bits(std::uint64_t bits, std::size_t length) {
  return length == 0 ? Word{} : Word::from_msb_bits(bits, length);
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back((rng() & 1U) != 0 ? Letter::Y : Letter::X);
  return w;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

void fail(CheckResult& r, std::string detail) {
  if (r.pass) r.detail = std::move(detail);
  r.pass = false;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

CheckResult check_classification(std::size_t max_length) {
  const auto start = Clock::now();
  CheckResult r = named("classification vs ideal orthogonality");
  for (std::size_t len = 1; len <= max_length; ++len) {
    const auto span = span_J_degree(len);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const Word w = word_from_bits(bits, len);
      ++r.cases;
      const WordClass c = classify(w);
      if (c.in_U() != in_U_by_orthogonality(w, span)) {
        fail(r, w.to_string() + ": classify says " + c.to_string());
      } else if (c.in_U() && c.reconstruct() != w) {
        fail(r, w.to_string() + ": " + c.to_string() + " reconstructs to " + c.reconstruct().to_string());
      }
    }
  }
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_shuffle_exhaustive(std::size_t max_total) {
  const auto start = Clock::now();
  CheckResult r = named("shuffle vs oracle, exhaustive");
  for (std::size_t total = 0; total <= max_total; ++total) {
    for (std::size_t lu = 0; lu <= total; ++lu) {
      const std::size_t lv = total - lu;
      for (std::uint64_t bu = 0; bu < (std::uint64_t{1} << lu); ++bu) {
        const Word u = word_from_bits(bu, lu);
        for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << lv); ++bv) {
          const Word v = word_from_bits(bv, lv);
          ++r.cases;
          const FreeElement fast = shuffle(u, v);
          if (fast != shuffle_oracle(u, v)) {
            fail(r, u.to_string() + " * " + v.to_string() + ": engine differs from interleaving sum");
          } else if (fast != detail::shuffle_right_peel(u, v)) {
            fail(r, u.to_string() + " * " + v.to_string() + ": right-peeling form differs");
          }
        }
      }
    }
  }
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_shuffle_random(std::size_t pairs, std::size_t max_total, std::uint64_t seed) {
  const auto start = Clock::now();
  CheckResult r = named("shuffle vs oracle, random");
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < pairs; ++n) {
    const std::size_t total = uniform(rng, 0, max_total);
    const std::size_t lu = uniform(rng, 0, total);
    const Word u = random_word(rng, lu);
    const Word v = random_word(rng, total - lu);
    ++r.cases;
    if (shuffle(u, v) != shuffle_oracle(u, v))
      fail(r, u.to_string() + " * " + v.to_string() + ": engine differs from interleaving sum");
  }
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_associativity(std::size_t triples, std::size_t max_length, std::uint64_t seed) {
  const auto start = Clock::now();
  CheckResult r = named("associativity");
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < triples; ++n) {
    const FreeElement a(random_word(rng, uniform(rng, 0, max_length)));
    const FreeElement b(random_word(rng, uniform(rng, 0, max_length)));
    const FreeElement c(random_word(rng, uniform(rng, 0, max_length)));
    ++r.cases;
    if (shuffle(shuffle(a, b), c) != shuffle(a, shuffle(b, c)))
      fail(r, "(" + to_string(a) + " * " + to_string(b) + ") * " + to_string(c) + " is not associative");
  }
  r.millis = elapsed_ms(start);
  return r;
}

CheckResult check_binomial(std::size_t pairs, std::size_t max_total, std::uint64_t seed) {
  const auto start = Clock::now();
  CheckResult r = named("q = 1 binomial counts");
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < pairs; ++n) {
    const std::size_t total = uniform(rng, 0, max_total);
    const std::size_t lu = uniform(rng, 0, total);
    const Word u = random_word(rng, lu);
    const Word v = random_word(rng, total - lu);
    ++r.cases;
    BigInt sum = 0;
    for (const auto& [w, c] : shuffle(u, v)) sum += c.eval_at_one();
    if (sum != binomial(total, lu))
      fail(r, u.to_string() + " * " + v.to_string() + ": q = 1 sum is " + sum.str());
  }
  r.millis = elapsed_ms(start);
  return r;
}

std::vector<CheckResult> run_property_checks() {
  return {check_classification(), check_shuffle_exhaustive(), check_shuffle_random(), check_associativity(),
          check_binomial()};
}

}  // namespace qshuffle
