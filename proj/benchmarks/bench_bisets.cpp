#include <benchmark/benchmark.h>

#include "bisetkit/biset.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/library.hpp"

using namespace bisetkit;

static void BM_ComposeTransitive(benchmark::State& state) {
  auto s3 = builtin_group("S3");
  auto c6 = builtin_group("C6");
  const auto& left = double_burnside(s3, c6);
  const auto& right = double_burnside(c6, s3);
  for (auto _ : state)
    for (std::size_t i = 0; i < left.dim(); i += 3)
      for (std::size_t j = 0; j < right.dim(); j += 3)
        benchmark::DoNotOptimize(compose(left.basis_biset(i), right.basis_biset(j)));
}
BENCHMARK(BM_ComposeTransitive);

static void BM_BisetIso(benchmark::State& state) {
  auto v4 = builtin_group("V4");
  const auto& db = double_burnside(v4, v4);
  auto u = disjoint_union(db.basis_biset(3), db.basis_biset(7));
  std::vector<Point> perm(u.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Point>((i * 5 + 1) % perm.size());
  auto w = relabel(u, perm);
  for (auto _ : state) benchmark::DoNotOptimize(biset_iso(u, w));
}
BENCHMARK(BM_BisetIso);

static void BM_DoubleBurnsideBasis(benchmark::State& state) {
  auto s3 = builtin_group("S3");
  auto d4 = builtin_group("D4");
  for (auto _ : state) benchmark::DoNotOptimize(DoubleBurnside(s3, d4).dim());
}
BENCHMARK(BM_DoubleBurnsideBasis);

static void BM_BiggerBurnside(benchmark::State& state) {
  auto s3 = builtin_group("S3");
  auto u = builtin_universe("upto6");
  for (auto _ : state) {
    BiggerBurnside b(s3, u);
    benchmark::DoNotOptimize(tilde_deflation(b).rank());
  }
}
BENCHMARK(BM_BiggerBurnside);

BENCHMARK_MAIN();
