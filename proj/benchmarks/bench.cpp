#include <benchmark/benchmark.h>

#include "torifol/mmp.hpp"
#include "torifol/polyhedron.hpp"
#include "torifol/resolution.hpp"
#include "torifol/singularities.hpp"

using namespace torifol;

namespace {

GaussianSubspace line(int n, std::vector<long> v) {
  GVec g;
  for (long x : v) g.push_back(GaussRat(x));
  return GaussianSubspace::span(n, {g});
}

// Hirzebruch surface F_a.
Fan hirzebruch(int a) { return Fan::make(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

void BM_StrictMeet(benchmark::State& st) {
  const std::vector<IntVec> gens{{1, 0, 0}, {1, 5, 0}, {1, 2, 7}};
  const RatSubspace V = line(3, {3, 8, 7}).real_trace();
  for (auto _ : st) benchmark::DoNotOptimize(strict_meet_witness(gens, V));
}
BENCHMARK(BM_StrictMeet);

void BM_IsCanonical(benchmark::State& st) {
  const auto m = static_cast<std::int64_t>(st.range(0));
  const Fan cone = Fan::make(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, m}}, {{0, 1, 2}});
  const ToricFoliatedPair pair(cone, GaussianSubspace::full(3));
  for (auto _ : st) benchmark::DoNotOptimize(is_canonical(pair).value);
}
BENCHMARK(BM_IsCanonical)->Arg(2)->Arg(5)->Arg(11);

void BM_DaggerResolution(benchmark::State& st) {
  const Fan cone = Fan::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}});
  const GaussianSubspace W = line(3, {1, st.range(0), st.range(0) + 1});
  for (auto _ : st) benchmark::DoNotOptimize(dagger_resolution(cone, W).added_rays.size());
}
BENCHMARK(BM_DaggerResolution)->Arg(1)->Arg(3)->Arg(7);

void BM_RunMMP(benchmark::State& st) {
  const ToricFoliatedPair pair(hirzebruch(static_cast<int>(st.range(0))), line(2, {1, 0}));
  for (auto _ : st) benchmark::DoNotOptimize(run_mmp(pair).steps.size());
}
BENCHMARK(BM_RunMMP)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
