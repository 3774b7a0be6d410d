#include <benchmark/benchmark.h>

#include "ulrc/bounds.hpp"
#include "ulrc/constructions.hpp"

using namespace ulrc;

namespace {

void BM_MinDistancePyramid(benchmark::State& state) {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 2, 16);
  for (auto _ : state) {
    const int d = min_distance(pc.code);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_MinDistancePyramid);

void BM_LocalitySubsetSearch(benchmark::State& state) {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
  for (auto _ : state) {
    const auto report = locality_all(pc.code, LocalityMethod::SubsetSearch);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_LocalitySubsetSearch);

void BM_LocalityDualEnumeration(benchmark::State& state) {
  // (6, 3) over GF(256): 256^3 - 1 dual words per pass.
  const auto lrc = gabidulin_lrc(3, AllSymbolLocalityProfile{{0, 6}}, 4, 4);
  for (auto _ : state) {
    const auto report = locality_all(lrc.code, LocalityMethod::DualEnumeration);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_LocalityDualEnumeration)->Unit(benchmark::kMillisecond);

void BM_PyramidConstruct(benchmark::State& state) {
  for (auto _ : state) {
    const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
    benchmark::DoNotOptimize(pc);
  }
}
BENCHMARK(BM_PyramidConstruct);

void BM_WitnessSet(benchmark::State& state) {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
  for (auto _ : state) {
    const auto w = witness_set(pc.code);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessSet);

}  // namespace

BENCHMARK_MAIN();
