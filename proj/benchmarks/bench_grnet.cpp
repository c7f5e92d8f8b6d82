#include <benchmark/benchmark.h>

#include "grnet/charts.hpp"
#include "grnet/cones.hpp"
#include "grnet/plabic.hpp"
#include "grnet/seeds.hpp"
#include "grnet/superpotential.hpp"

using namespace grnet;

static void BM_Matchings(benchmark::State& st) {
  auto m = build_rectangles_model(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_matchings(m));
}
BENCHMARK(BM_Matchings)->Args({2, 5})->Args({3, 6})->Args({3, 7})->Unit(benchmark::kMillisecond);

static void BM_NetworkCharts(benchmark::State& st) {
  auto m = build_rectangles_model(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(network_charts(m));
}
BENCHMARK(BM_NetworkCharts)->Args({2, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_SquareMove(benchmark::State& st) {
  auto m = build_rectangles_model(3, 6);
  int f = m.find_face(KSubset::parse("125", 6));
  for (auto _ : st) benchmark::DoNotOptimize(square_move(m, f));
}
BENCHMARK(BM_SquareMove)->Unit(benchmark::kMicrosecond);

static void BM_KappaAll(benchmark::State& st) {
  auto s = seed_of(build_rectangles_model(4, 9));
  auto subsets = all_subsets(4, 9);
  for (auto _ : st)
    for (auto& i : subsets) benchmark::DoNotOptimize(kappa_vector(s, i));
}
BENCHMARK(BM_KappaAll)->Unit(benchmark::kMicrosecond);

static void BM_LatticePoints(benchmark::State& st) {
  auto c = gt_inequalities(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(lattice_points(c, st.range(2)));
}
BENCHMARK(BM_LatticePoints)->Args({2, 4, 3})->Args({2, 5, 2})->Args({3, 6, 2})->Unit(benchmark::kMillisecond);

static void BM_WFormula(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_wformula(3, 6));
}
BENCHMARK(BM_WFormula)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
