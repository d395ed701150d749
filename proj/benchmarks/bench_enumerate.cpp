#include <benchmark/benchmark.h>

#include "dp4a13/surface.hpp"
#include "dp4a13/torsor.hpp"

using namespace dp4a13;

static void BM_TorsorCount(benchmark::State& state) {
    const int case_i = static_cast<int>(state.range(0));
    const i64 bound = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_torsor(case_i, bound));
}
BENCHMARK(BM_TorsorCount)
    ->Args({1, 1000})
    ->Args({2, 10000})
    ->Args({3, 10000})
    ->Args({4, 100000})
    ->Args({5, 10000})
    ->Args({6, 10000})
    ->Unit(benchmark::kMillisecond);

static void BM_DirectCount(benchmark::State& state) {
    const int case_i = static_cast<int>(state.range(0));
    const i64 bound = state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_direct(case_i, bound));
}
BENCHMARK(BM_DirectCount)
    ->Args({1, 1000})
    ->Args({4, 1000})
    ->Args({5, 1000})
    ->Unit(benchmark::kMillisecond);

static void BM_TorsorCountThreaded(benchmark::State& state) {
    TorsorEnumOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_torsor(4, 1000000, opts));
}
BENCHMARK(BM_TorsorCountThreaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
