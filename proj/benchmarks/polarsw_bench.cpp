#include <benchmark/benchmark.h>

#include "polarsw/designs.hpp"
#include "polarsw/invariants.hpp"
#include "polarsw/polar_graphs.hpp"
#include "polarsw/spectral.hpp"
#include "polarsw/switching.hpp"

using namespace polarsw;

namespace {

const Graph& unitary() {
  static const Graph g =
      build_polar_graph(PolarSpace::standard(FormKind::hermitian, 6, 4), PolarGraphKind::polarity).graph;
  return g;
}

const Graph& parabolic() {
  static const Graph g =
      build_polar_graph(PolarSpace::standard(FormKind::parabolic, 7, 3), PolarGraphKind::plus).graph;
  return g;
}

void BM_BuildUnitary(benchmark::State& state) {
  const auto s = PolarSpace::standard(FormKind::hermitian, 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_polar_graph(s, PolarGraphKind::polarity));
}
BENCHMARK(BM_BuildUnitary)->Unit(benchmark::kMillisecond);

void BM_BuildParabolic(benchmark::State& state) {
  const auto s = PolarSpace::standard(FormKind::parabolic, 7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_polar_graph(s, PolarGraphKind::plus));
}
BENCHMARK(BM_BuildParabolic)->Unit(benchmark::kMillisecond);

void BM_SrgScan(benchmark::State& state) {
  const auto& g = state.range(0) == 0 ? parabolic() : unitary();
  for (auto _ : state) benchmark::DoNotOptimize(srg_scan(g));
}
BENCHMARK(BM_SrgScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Charpoly(benchmark::State& state) {
  const auto& g = state.range(0) == 0 ? parabolic() : unitary();
  const auto p = random_primes(1, 0).front();
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_mod_p(g, p));
}
BENCHMARK(BM_Charpoly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TriangleScan(benchmark::State& state) {
  const auto& g = state.range(0) == 0 ? parabolic() : unitary();
  for (auto _ : state) benchmark::DoNotOptimize(triple_intersection_distribution(g));
}
BENCHMARK(BM_TriangleScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaximalCliques(benchmark::State& state) {
  const auto g = block_graph(grassmann_design(4, 2).design);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Unit(benchmark::kMicrosecond);

void BM_TangentSearch(benchmark::State& state) {
  const auto s = PolarSpace::standard(FormKind::hermitian, 6, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_tangent_configuration(s, QuotientTarget::hermitian_nondeg, PointFilter::nonisotropic));
}
BENCHMARK(BM_TangentSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
