#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "rieloc/kernels.hpp"
#include "rieloc/localisation.hpp"

using namespace rieloc;

namespace {

void BM_dirichlet_direct(benchmark::State& state) {
  const JacobiParams p{0.5, 0.5};
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_direct(p, L, 0.3));
  }
}
BENCHMARK(BM_dirichlet_direct)->RangeMultiplier(4)->Range(64, 4096);

void BM_dirichlet_closed(benchmark::State& state) {
  const JacobiParams p{0.5, 0.5};
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_closed(p, L, 0.3));
  }
}
BENCHMARK(BM_dirichlet_closed)->RangeMultiplier(4)->Range(64, 4096);

void BM_filtered_direct(benchmark::State& state) {
  const JacobiParams p{0.5, 0.5};
  const Filter f = hermite_filter(1);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(filtered_direct(p, f, L, 0.3));
  }
}
BENCHMARK(BM_filtered_direct)->RangeMultiplier(4)->Range(64, 2048);

void BM_filtered_sbp(benchmark::State& state) {
  const JacobiParams p{0.5, 0.5};
  const Filter f = hermite_filter(1);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(filtered_sbp(p, f, L, 4, 0.3));
  }
}
BENCHMARK(BM_filtered_sbp)->RangeMultiplier(4)->Range(64, 2048);

void BM_gauss_nodes_uncached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  int shift = 0;
  for (auto _ : state) {
    // vary n so the canonical-rule cache does not absorb the work
    benchmark::DoNotOptimize(gauss_nodes(n + (shift++ % 7), -1.0, 1.0));
  }
}
BENCHMARK(BM_gauss_nodes_uncached)->RangeMultiplier(4)->Range(64, 4096);

void BM_local_convolution_fourier(benchmark::State& state) {
  const SphereDim d3{3};
  const int L = static_cast<int>(state.range(0));
  const auto spec = KernelSpec::fourier(d3, L);
  const auto one = ZonalFunction::one();
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_convolution(d3, spec, one, std::numbers::pi / 4, 0.0));
  }
}
BENCHMARK(BM_local_convolution_fourier)->RangeMultiplier(4)->Range(64, 2048);

}  // namespace

BENCHMARK_MAIN();
