#include <benchmark/benchmark.h>

#include "qshuffle/families.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/shuffle.hpp"

namespace {

using namespace qshuffle;

// Words of length n in which both letters occur, so no fast path applies.
Word mixed_word(std::size_t n, std::uint64_t salt) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(((i * 7 + salt) % 3) == 0 ? Letter::Y : Letter::X);
  return w;
}

void BM_ShuffleWords(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Word u = mixed_word(n, 1);
  const Word v = mixed_word(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle(u, v));
  state.SetLabel(std::to_string(shuffle(u, v).size()) + " terms");
}
BENCHMARK(BM_ShuffleWords)->DenseRange(2, 10, 2);

void BM_ShuffleOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Word u = mixed_word(n, 1);
  const Word v = mixed_word(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_oracle(u, v));
}
BENCHMARK(BM_ShuffleOracle)->DenseRange(2, 8, 2);

void BM_ShuffleGeneralPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Word u = mixed_word(n, 1);
  const Word v = mixed_word(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(detail::shuffle_general(u, v));
}
BENCHMARK(BM_ShuffleGeneralPath)->DenseRange(2, 8, 2);

void BM_ShuffleLongTimesLetter(benchmark::State& state) {
  const Word u = mixed_word(static_cast<std::size_t>(state.range(0)), 1);
  const Word v = letter_word(Letter::Y);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle(u, v));
}
// Past 64 letters the packed word keys no longer apply.
BENCHMARK(BM_ShuffleLongTimesLetter)->Arg(60)->Arg(100);

void BM_ClassifyAllWords(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t in_u = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits)
      in_u += classify(Word::from_msb_bits(bits, len)).in_U() ? 1 : 0;
    benchmark::DoNotOptimize(in_u);
  }
}
BENCHMARK(BM_ClassifyAllWords)->Arg(10)->Arg(16);

void BM_VerifyFamily(benchmark::State& state, const char* id, std::vector<unsigned> params) {
  for (auto _ : state) benchmark::DoNotOptimize(verify(id, params));
}
BENCHMARK_CAPTURE(BM_VerifyFamily, letter_commutator_n4, "P4.xcomm2.1", std::vector<unsigned>{4});
BENCHMARK_CAPTURE(BM_VerifyFamily, convolution_n3, "P5.conv3.1a", std::vector<unsigned>{3});
BENCHMARK_CAPTURE(BM_VerifyFamily, alternating_a11_3_3, "A.11", std::vector<unsigned>{3, 3});

void BM_SeriesIdentity(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_series_identity("S6.7.1", order));
}
BENCHMARK(BM_SeriesIdentity)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
