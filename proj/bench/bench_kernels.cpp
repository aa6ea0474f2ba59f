// Parallel kernels against their serial reference versions.
#include <benchmark/benchmark.h>

#include "vlh/complex.hpp"
#include "vlh/jones.hpp"
#include "vlh/linalg.hpp"

namespace {

vlh::VirtualLinkDiagram sample(int which) {
  switch (which) {
    case 0: return vlh::from_braid(3, "1 -2 1 -2", "figure_eight");
    case 1: return vlh::from_braid(3, "1 -2 1 -2 1 -2", "borromean");
    default: return vlh::from_braid(3, "1 -2 1 -2 1 -2 1 1", "eight_crossings");
  }
}

vlh::TheoryParams rational_theory() {
  const vlh::Field q = vlh::Field::rationals();
  return vlh::theory_from_triple(vlh::Scalar(q, 1), vlh::Scalar(q, 0), vlh::Scalar(q, 1));
}

void BM_BuildComplex(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  const auto th = vlh::preset("f2_row7");
  for (auto _ : state) benchmark::DoNotOptimize(vlh::build_complex(d, th));
}
BENCHMARK(BM_BuildComplex)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_BuildComplexReference(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  const auto th = vlh::preset("f2_row7");
  for (auto _ : state) benchmark::DoNotOptimize(vlh::build_complex_reference(d, th));
}
BENCHMARK(BM_BuildComplexReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RankSparse(benchmark::State& state) {
  const auto c = vlh::build_complex(sample(static_cast<int>(state.range(0))), rational_theory());
  for (auto _ : state) {
    for (const auto& d : c.differentials) benchmark::DoNotOptimize(vlh::rank(d));
  }
}
BENCHMARK(BM_RankSparse)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_RankParallel(benchmark::State& state) {
  const auto c = vlh::build_complex(sample(static_cast<int>(state.range(0))), rational_theory());
  for (auto _ : state) benchmark::DoNotOptimize(vlh::ranks(c.differentials));
}
BENCHMARK(BM_RankParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_RankDenseReference(benchmark::State& state) {
  const auto c = vlh::build_complex(sample(static_cast<int>(state.range(0))), rational_theory());
  for (auto _ : state) {
    for (const auto& d : c.differentials) benchmark::DoNotOptimize(vlh::rank_reference(d));
  }
}
BENCHMARK(BM_RankDenseReference)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Jones(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlh::kauffman_jones(d));
}
BENCHMARK(BM_Jones)->DenseRange(0, 2);

void BM_JonesReference(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlh::kauffman_jones_reference(d));
}
BENCHMARK(BM_JonesReference)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
