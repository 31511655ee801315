//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bench_kernels.cpp
//! Serial reference vs OpenMP kernel on the Monte Carlo workloads.
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include "bellworlds/harness.hpp"
#include "bellworlds/kernels.hpp"

using namespace bellworlds;

namespace
{
Model model_for(int tag)
{
    switch (tag)
    {
        case 0: return QuantumRef{};
        case 1: return LrmModel{ClassWeights::uniform(20)};
        case 2: return SausageModel{};
        default: return BranchModel{};
    }
}

void run_experiment_bench(benchmark::State& state, Execution exec)
{
    Schedule schedule;
    schedule.n_total = static_cast<std::uint64_t>(state.range(1));
    schedule.seed = 42;
    schedule.model = model_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
    {
        CounterTable t = run_experiment(schedule, exec);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.counters["threads"] = exec == Execution::serial ? 1 : kernels::omp::max_threads();
}

void BM_RunSerial(benchmark::State& state)
{
    run_experiment_bench(state, Execution::serial);
}

void BM_RunParallel(benchmark::State& state)
{
    run_experiment_bench(state, Execution::parallel);
}

void classify_bench(benchmark::State& state, Execution exec)
{
    auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
    {
        CounterTable t = kernels::classify_uniform(Angle{0.0}, Angle{pi / 8}, n, 7, exec);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifySerial(benchmark::State& state)
{
    classify_bench(state, Execution::serial);
}

void BM_ClassifyParallel(benchmark::State& state)
{
    classify_bench(state, Execution::parallel);
}
}  // namespace

// Model tags: 0 quantum, 1 lrm, 2 sausage, 3 branch
BENCHMARK(BM_RunSerial)->ArgsProduct({{0, 1, 2, 3}, {1 << 20}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunParallel)->ArgsProduct({{0, 1, 2, 3}, {1 << 20}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
