#include <benchmark/benchmark.h>

#include "clusterforge/cluster.hpp"
#include "clusterforge/lattice.hpp"
#include "clusterforge/order.hpp"
#include "clusterforge/polygon.hpp"
#include "clusterforge/quiver.hpp"

using namespace clusterforge;

static void BM_BuildIceQuiver(benchmark::State& state) {
    Triangulation t = fan_triangulation(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_ice_quiver(t));
}
BENCHMARK(BM_BuildIceQuiver)->Arg(6)->Arg(9)->Arg(12);

static void BM_ThetaMetricAllPairs(benchmark::State& state) {
    Triangulation t = fan_triangulation(static_cast<int>(state.range(0)), 1);
    LengthMode mode = state.range(1) ? LengthMode::shortest_path : LengthMode::closed_formula;
    for (auto _ : state) {
        ThetaMetric m(t, mode);
        int total = 0;
        for (int i = 1; i <= m.size(); ++i)
            for (int j = 1; j <= m.size(); ++j) total += m.length(i, j);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ThetaMetricAllPairs)->Args({8, 0})->Args({8, 1})->Args({12, 0})->Args({12, 1});

static void BM_ExpandLongDiagonal(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Triangulation fan = fan_triangulation(n, 1);
    Edge longest(2, n - 1);
    for (auto _ : state) {
        ClusterContext ctx(fan);  // fresh memo each round
        benchmark::DoNotOptimize(ctx.expand(longest));
    }
}
BENCHMARK(BM_ExpandLongDiagonal)->Arg(7)->Arg(9)->Arg(11);

static void BM_DecomposeRoundTrip(benchmark::State& state) {
    std::vector<CMModule> mods = {{1, 4, 6}, {2, 5, 6}, {1, 3, 6}, {3, 6, 6}};
    CycleRep rep = random_glue(mods, 12345);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_cm(rep));
}
BENCHMARK(BM_DecomposeRoundTrip);

static void BM_EnumerateTriangulations(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(n));
}
BENCHMARK(BM_EnumerateTriangulations)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
