#include <benchmark/benchmark.h>

#include "grosslat/gramgross.hpp"
#include "grosslat/lattice.hpp"
#include "grosslat/oracle.hpp"
#include "grosslat/type_enumeration.hpp"

using namespace grosslat;

static void BM_EnumerateTypes(benchmark::State& state) {
  const BigInteger p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(p));
}
BENCHMARK(BM_EnumerateTypes)->Arg(101)->Arg(433)->Arg(1103)->Unit(benchmark::kMillisecond);

static void BM_MinimalBasis(benchmark::State& state) {
  const auto O = standard_maximal_order(state.range(0));
  const auto L = gross_lattice(O);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_basis(L));
}
BENCHMARK(BM_MinimalBasis)->Arg(1009)->Arg(100003)->Unit(benchmark::kMicrosecond);

static void BM_ShortVectors(benchmark::State& state) {
  const IntMatrix g{{7, 3, 2}, {3, 19, -8}, {2, -8, 36}};
  const BigInteger bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(g, bound));
}
BENCHMARK(BM_ShortVectors)->Arg(62)->Arg(500);

static void BM_GramGross(benchmark::State& state) {
  const BigInteger p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gram_gross(p, 7));
}
BENCHMARK(BM_GramGross)->Arg(31)->Arg(10007);

static void BM_SupersingularSet(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(supersingular_j_set(p));
}
BENCHMARK(BM_SupersingularSet)->Arg(101)->Arg(307)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
