#include <benchmark/benchmark.h>

#include <random>

#include "bisetkit/linalg.hpp"

using namespace bisetkit;

static ZMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
  return m;
}

static void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(5)->Arg(10)->Arg(20);

static void BM_BareissDeterminant(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->Arg(10)->Arg(20)->Arg(40);

static void BM_SparseModule(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < n / 2; ++r) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    rows.push_back(a < b ? SparseRow{{a, 1}, {b, -1}} : SparseRow{{b, -1}, {a, 1}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(PresentedModule::from_sparse(n, rows));
}
BENCHMARK(BM_SparseModule)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
