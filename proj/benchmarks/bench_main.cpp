#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gsft/faddeeva.hpp"
#include "gsft/reference.hpp"
#include "gsft/transform.hpp"

namespace {

// Cycles through points that exercise every evaluation region of w.
void BM_FaddeevaW(benchmark::State& state) {
  std::vector<gsft::Complex> points;
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 16; ++j) points.emplace_back(-8.0 + 0.25 * i, -2.0 + 0.5 * j);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsft::w(points[k]));
    k = (k + 1) % points.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FaddeevaW);

void BM_WWeighted(benchmark::State& state) {
  double a = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsft::w_weighted(1.7, a));
    a = a > 30.0 ? 0.0 : a + 0.37;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_WWeighted);

struct Fixture {
  explicit Fixture(int n_half)
      : cfg(gsft::TransformConfig::from_effective_length(gsft::kExampleLength, n_half)),
        samples(gsft::sample_example(gsft::WaveletPart::full, cfg)),
        grid(gsft::EvaluationGrid::uniform(-10.0, 10.0, 201)) {}
  gsft::TransformConfig cfg;
  gsft::SampledFunction samples;
  gsft::EvaluationGrid grid;
};

void run_formulation(benchmark::State& state, gsft::Formulation formulation) {
  const Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gsft::evaluate(formulation, gsft::Direction::forward, fx.samples, fx.cfg, fx.grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.grid.size()));
}

void BM_ForwardWeighted(benchmark::State& state) { run_formulation(state, gsft::Formulation::weighted); }
void BM_ForwardTruncated(benchmark::State& state) { run_formulation(state, gsft::Formulation::truncated); }
void BM_ForwardHarmonic(benchmark::State& state) { run_formulation(state, gsft::Formulation::harmonic); }
BENCHMARK(BM_ForwardWeighted)->Arg(50)->Arg(300);
BENCHMARK(BM_ForwardTruncated)->Arg(50)->Arg(300);
BENCHMARK(BM_ForwardHarmonic)->Arg(50)->Arg(300);

void BM_PrecomputeWeights(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsft::precompute_weights(fx.cfg, fx.grid, gsft::Direction::forward));
  }
}
BENCHMARK(BM_PrecomputeWeights)->Arg(50)->Arg(300);

// Applying a stored table: the cost left once weights are amortized.
void BM_ForwardWithTable(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  const auto table = gsft::precompute_weights(fx.cfg, fx.grid, gsft::Direction::forward);
  for (auto _ : state) benchmark::DoNotOptimize(gsft::forward_with_table(fx.samples, table));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.grid.size()));
}
BENCHMARK(BM_ForwardWithTable)->Arg(50)->Arg(300);

void BM_DeltaEnvelopeFig7(benchmark::State& state) {
  const auto cfg = gsft::TransformConfig::with_effective_length(0.00166389, 0.00166389, 300, 1.0);
  const auto grid = gsft::EvaluationGrid::uniform(-10.0, 10.0, 2001);
  for (auto _ : state) benchmark::DoNotOptimize(gsft::delta_envelope(cfg, grid));
}
BENCHMARK(BM_DeltaEnvelopeFig7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
