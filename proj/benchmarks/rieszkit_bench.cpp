#include <random>

#include <benchmark/benchmark.h>

#include "rieszkit/corpus.hpp"
#include "rieszkit/decompose.hpp"
#include "rieszkit/hardy.hpp"
#include "rieszkit/lattice.hpp"

namespace rieszkit {
namespace {

IntMatrix random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t dim) {
  std::uniform_int_distribution<std::int64_t> e(-20, 20);
  IntMatrix m(rows, IntVec(dim));
  for (auto& r : m) {
    for (auto& x : r) x = e(rng);
  }
  return m;
}

void BM_Hnf(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto rows = random_rows(rng, dim + 2, dim);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(dim, rows));
}
BENCHMARK(BM_Hnf)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_Convolve(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto corpus = measure_corpus(lexicographic_order(dim), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(corpus[0], corpus[1]));
}
BENCHMARK(BM_Convolve)->Arg(2)->Arg(3);

void BM_TotalVariation(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto mu = measure_corpus(lexicographic_order(dim), 3, 1).front();
  QuadratureOptions q;
  q.rel_tol = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(total_variation(mu, q));
}
BENCHMARK(BM_TotalVariation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto chain = lexicographic_order(dim);
  const auto mu = measure_corpus(chain, 4, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(mu, chain));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(3);

void BM_SignScan(benchmark::State& state) {
  const auto chain = lexicographic_order(2);
  const auto dec = decompose(measure_corpus(chain, 5, 1).front(), chain);
  QuadratureOptions q;
  q.rel_tol = 1e-4;
  for (auto _ : state) benchmark::DoNotOptimize(sign_scan(dec, q));
}
BENCHMARK(BM_SignScan)->Unit(benchmark::kMillisecond);

void BM_DoobCheck(benchmark::State& state) {
  const auto chain = lexicographic_order(2);
  const auto f = poly_corpus(chain, 6, 1).front();
  GridOptions g;
  g.n = static_cast<std::size_t>(state.range(0));
  g.quadrature.rel_tol = 1e-5;
  for (auto _ : state) benchmark::DoNotOptimize(doob_check(f, chain, g));
}
BENCHMARK(BM_DoobCheck)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rieszkit

BENCHMARK_MAIN();
