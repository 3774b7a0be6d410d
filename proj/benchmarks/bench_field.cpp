#include <benchmark/benchmark.h>

#include "ulrc/galois.hpp"
#include "ulrc/rng.hpp"

using namespace ulrc;

namespace {

void BM_MulTabled(benchmark::State& state) {
  auto f = FieldSpec::make(2, 2, 4);  // GF(256), log/antilog path
  SplitMix64 rng(1);
  const Elem a = static_cast<Elem>(1 + rng.below(f->order() - 1));
  Elem x = static_cast<Elem>(1 + rng.below(f->order() - 1));
  for (auto _ : state) {
    x = f->mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MulTabled);

void BM_MulGeneric(benchmark::State& state) {
  auto f = FieldSpec::make(2, 1, 17);  // 2^17 elements, polynomial path
  SplitMix64 rng(2);
  const Elem a = static_cast<Elem>(1 + rng.below(f->order() - 1));
  Elem x = static_cast<Elem>(1 + rng.below(f->order() - 1));
  for (auto _ : state) {
    x = f->mul(x, a);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MulGeneric);

void BM_Frobenius(benchmark::State& state) {
  auto f = FieldSpec::make(2, 2, 4);
  SplitMix64 rng(3);
  Elem x = static_cast<Elem>(1 + rng.below(f->order() - 1));
  unsigned i = 0;
  for (auto _ : state) {
    x = f->frobenius(x, 1 + (i++ % 3));
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Frobenius);

void BM_MooreSolve(benchmark::State& state) {
  auto f = FieldSpec::make(2, 2, 4);
  const std::size_t K = static_cast<std::size_t>(state.range(0));
  std::vector<Elem> points, values;
  for (std::size_t i = 0; i < K; ++i)
    points.push_back(f->pow(static_cast<Elem>(f->base_order()), i));
  SplitMix64 rng(4);
  for (std::size_t i = 0; i < K; ++i)
    values.push_back(static_cast<Elem>(rng.below(f->order())));
  for (auto _ : state) {
    auto poly = moore_solve(f, points, values);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_MooreSolve)->Arg(2)->Arg(4);

}  // namespace
