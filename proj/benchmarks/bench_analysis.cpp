#include <benchmark/benchmark.h>

#include "garnorm/class_analysis.hpp"
#include "garnorm/garside_family.hpp"
#include "garnorm/instances.hpp"
#include "garnorm/rewriting.hpp"

using namespace garnorm;

static void BM_BuildBraidLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_braid(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildBraidLattice)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ComputeClass(benchmark::State& state) {
  const Instance I = load_instance(state.range(0) == 0 ? "braid:4" : "atilde2");
  for (auto _ : state) benchmark::DoNotOptimize(compute_class(I.nz, 8));
}
BENCHMARK(BM_ComputeClass)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Closure(benchmark::State& state) {
  for (auto _ : state) {
    // fresh monoid each time so the congruence memo starts empty
    const PresentedMonoid m = presented_atilde2();
    benchmark::DoNotOptimize(closure_smallest_garside(m, 8));
  }
}
BENCHMARK(BM_Closure)->Unit(benchmark::kMillisecond);

static void BM_LongestDerivation(benchmark::State& state) {
  const RewriteSystem r = system_of(load_instance("atilde2").nz);
  for (auto _ : state) benchmark::DoNotOptimize(longest_derivation(r, state.range(0)));
}
BENCHMARK(BM_LongestDerivation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
