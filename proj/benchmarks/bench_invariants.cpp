#include <benchmark/benchmark.h>

#include "symforms/invariants.hpp"
#include "symforms/series.hpp"

using namespace symforms;

namespace {

SurfaceHodgeData surface(unsigned h10, unsigned h20, std::uint64_t p) {
  return SurfaceHodgeData{1, h10, h20, FieldSpec(p), ""};
}

void BM_enumerate_basis(benchmark::State& state) {
  auto d = surface(3, 3, 2);
  auto n = (unsigned)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_basis(d, n, 4));
  }
}
BENCHMARK(BM_enumerate_basis)->Arg(3)->Arg(4)->Arg(5);

void BM_invariant_dimension_f2(benchmark::State& state) {
  auto d = surface(3, 3, 2);
  auto n = (unsigned)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_dimension(d, n, 4));
  }
}
BENCHMARK(BM_invariant_dimension_f2)->Arg(3)->Arg(4)->Arg(5);

void BM_invariant_dimension_q(benchmark::State& state) {
  auto d = surface(3, 3, 0);
  auto n = (unsigned)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_dimension(d, n, 4));
  }
}
BENCHMARK(BM_invariant_dimension_q)->Arg(3)->Arg(4)->Arg(5);

void BM_bruteforce_f2(benchmark::State& state) {
  auto d = surface(3, 3, 2);
  auto n = (unsigned)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_dimension_bruteforce(d, n, 4));
  }
}
BENCHMARK(BM_bruteforce_f2)->Arg(3)->Arg(4)->Arg(5);

void BM_char0_series(benchmark::State& state) {
  auto d = surface(3, 3, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(char0_hq0_series(d, 12, 8));
  }
}
BENCHMARK(BM_char0_series);

}  // namespace

BENCHMARK_MAIN();
