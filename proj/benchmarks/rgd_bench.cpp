#include <benchmark/benchmark.h>

#include "rgd/density.hpp"
#include "rgd/oracle.hpp"
#include "rgd/partition.hpp"
#include "rgd/pfaffian.hpp"

using namespace rgd;

static void BM_Pfaffian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng g(5);
    SkewMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) a.set(i, j, LogSigned{g.uniform() < 0.5 ? -1 : 1, 60.0 * g.uniform() - 30.0});
    }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->Arg(12)->Arg(40)->Arg(80);

static void BM_ZetaTable(benchmark::State& state) {
    for (auto _ : state) {
        for (int m = 2; m <= 12; ++m) {
            for (int k = 1; k <= 24; ++k) benchmark::DoNotOptimize(zeta(m, 0.1 * k, OddBorder::Printed));
        }
    }
}
BENCHMARK(BM_ZetaTable)->Unit(benchmark::kMillisecond);

static void BM_Z1(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(z1Pfaffian(m, 0.01));
}
BENCHMARK(BM_Z1)->Arg(8)->Arg(20)->Arg(40);

static void BM_Z4(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(z4Pfaffian(m, 0.5));
}
BENCHMARK(BM_Z4)->Arg(2)->Arg(7)->Arg(20);

static void BM_Rho2Curve(benchmark::State& state) {
    const EnsembleSpec spec{Family::A, 2, static_cast<int>(state.range(0)), 0.2};
    const auto grid = defaultDensityGrid(spec);
    for (auto _ : state) benchmark::DoNotOptimize(densityCurve(spec, grid));
}
BENCHMARK(BM_Rho2Curve)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_QuadratureOracle(benchmark::State& state) {
    const EnsembleSpec spec{Family::A, 1, static_cast<int>(state.range(0)), 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(zOracleQuadrature(spec));
}
BENCHMARK(BM_QuadratureOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloOracle(benchmark::State& state) {
    const EnsembleSpec spec{Family::A, 1, 4, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(zOracleMCGrid({spec}, 1, 100000));
}
BENCHMARK(BM_MonteCarloOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
