// SPDX-License-Identifier: Apache-2.0
//
// Serial O(N^4) reference against the factored OpenMP kernel, from cold memo
// tables each iteration.

#include "certmass/basis.hpp"
#include "certmass/integrals.hpp"
#include "certmass/mass.hpp"

#include <benchmark/benchmark.h>

using namespace certmass;

namespace {

void cold()
{
    clear_inner_sum_cache();
    clear_integral_caches();
    clear_basis_caches();
}

void BM_SerialReference(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        state.PauseTiming();
        cold();
        state.ResumeTiming();
        benchmark::DoNotOptimize(partial_sum_reference(Manifold::S2xS2, n));
    }
    state.SetComplexityN(state.range(0));
}

void BM_ParallelKernel(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        state.PauseTiming();
        cold();
        state.ResumeTiming();
        benchmark::DoNotOptimize(partial_sum(Manifold::S2xS2, n, threads));
    }
    state.counters["threads"] = static_cast<double>(threads);
}

void BM_InnerSumFill(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        state.PauseTiming();
        cold();
        state.ResumeTiming();
        ensure_inner_sums(n, threads);
    }
}

}  // namespace

BENCHMARK(BM_SerialReference)->Arg(5)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelKernel)
    ->ArgsProduct({{5, 10, 20, 30}, {1}})
    ->ArgsProduct({{60, 100}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_InnerSumFill)->ArgsProduct({{100}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
