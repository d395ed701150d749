#include <benchmark/benchmark.h>

#include "dp4a13/census.hpp"
#include "dp4a13/constants.hpp"

using namespace dp4a13;

static void BM_AlphaTable(benchmark::State& state) {
    for (auto _ : state)
        for (int i = 1; i <= 6; ++i)
            benchmark::DoNotOptimize(c_infinity(i));
}
BENCHMARK(BM_AlphaTable)->Unit(benchmark::kMicrosecond);

static void BM_EulerProduct(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(c_finite(1, state.range(0)).value);
}
BENCHMARK(BM_EulerProduct)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

static void BM_CensusScan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_surface_fp(state.range(0)));
}
BENCHMARK(BM_CensusScan)->Arg(13)->Arg(47)->Unit(benchmark::kMillisecond);

static void BM_ArchQuadrature(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tau_infinity_check());
}
BENCHMARK(BM_ArchQuadrature)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
