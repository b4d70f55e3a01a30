#include <benchmark/benchmark.h>

#include "bisetkit/burnside.hpp"
#include "bisetkit/extension.hpp"
#include "bisetkit/library.hpp"

using namespace bisetkit;

static void BM_ConstantSpace(benchmark::State& state) {
  auto u = builtin_universe("upto6");
  auto p = std::make_shared<ConstantFunctor>();
  auto g = builtin_group(state.range(0) ? "S3" : "V4");
  for (auto _ : state) benchmark::DoNotOptimize(ExtensionSpace(p, u, g).rank());
}
BENCHMARK(BM_ConstantSpace)->Arg(0)->Arg(1);

static void BM_SignSpaceUpto12(benchmark::State& state) {
  auto u = builtin_universe("upto12");
  auto p = std::make_shared<SignFunctor>();
  auto g = builtin_group("S3");
  for (auto _ : state) benchmark::DoNotOptimize(ExtensionSpace(p, u, g).rank());
}
BENCHMARK(BM_SignSpaceUpto12);

static void BM_ActionMatrix(benchmark::State& state) {
  auto u = builtin_universe("upto6");
  ExtensionFunctor e(std::make_shared<ConstantFunctor>(), u);
  auto s3 = builtin_group("S3");
  auto c6 = builtin_group("C6");
  const auto& db = double_burnside(s3, c6);
  e.space(s3);
  e.space(c6);
  for (auto _ : state)
    for (std::size_t i = 0; i < db.dim(); i += 4) benchmark::DoNotOptimize(e.apply(db.basis_biset(i)));
}
BENCHMARK(BM_ActionMatrix);

BENCHMARK_MAIN();
