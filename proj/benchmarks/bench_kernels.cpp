#include "zigzag/engine.hpp"
#include "zigzag/kernel.hpp"

#include <benchmark/benchmark.h>

using namespace zigzag;

static void BM_MakeOscillatorKernel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_oscillator_kernel(1.0, 0.7));
  }
}
BENCHMARK(BM_MakeOscillatorKernel);

static void BM_ComposeGaussian(benchmark::State& state) {
  const ComplexGaussianKernel a = make_oscillator_kernel(1.0, 0.3);
  const ComplexGaussianKernel b = make_oscillator_kernel(1.0, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_gaussian(a, b));
  }
}
BENCHMARK(BM_ComposeGaussian);

static void BM_ApplyToState(benchmark::State& state) {
  const ComplexGaussianKernel k = make_oscillator_kernel(1.0, 1.0);
  const GaussianState psi = GaussianState::normalized(0.3, 0.8, -0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_to_state(k, psi));
  }
}
BENCHMARK(BM_ApplyToState);

static void BM_ClassifyDelta(benchmark::State& state) {
  const ComplexGaussianKernel k = make_oscillator_kernel(1.0, 1.0);
  const ComplexGaussianKernel r = reverse_kernel(k);
  const auto probes = random_probe_states(1, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_delta(r, k, probes, 1e-8));
  }
}
BENCHMARK(BM_ClassifyDelta);

static void BM_ShortTimeForward(benchmark::State& state) {
  const Grid g = build_grid(static_cast<int>(state.range(0)), -10.0, 10.0);
  const Potential v = Potential::harmonic(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(short_time_forward(g, v, 0.05));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShortTimeForward)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_ComposeMatrices(benchmark::State& state) {
  const Grid g = build_grid(static_cast<int>(state.range(0)), -10.0, 10.0);
  const Potential v = Potential::harmonic(1.0);
  const KernelMatrix f = short_time_forward(g, v, 0.05);
  const KernelMatrix b = short_time_backward(g, v, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_matrices(b, f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComposeMatrices)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_PropagateSegment(benchmark::State& state) {
  const Grid g = build_grid(128, -10.0, 10.0);
  const Potential v = Potential::harmonic(1.0);
  const int slices = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        propagate_segment(g, v, 1.0, slices, Direction::forward));
  }
}
BENCHMARK(BM_PropagateSegment)->Arg(10)->Arg(100)->Arg(1000);

static void BM_GridCompare(benchmark::State& state) {
  ZigzagScenario s;
  s.tau_map = build_tau_map(0.0, 1.0, 2.0, 3.0);
  s.potential = Potential::harmonic(1.0);
  s.grid = build_grid(128, -10.0, 10.0);
  s.slices_per_unit_time = 100;
  CompareOptions options;
  options.path = ComparisonPath::grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(s, options));
  }
}
BENCHMARK(BM_GridCompare);

BENCHMARK_MAIN();
