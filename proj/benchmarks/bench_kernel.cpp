#include <benchmark/benchmark.h>

#include "combwalk/kernel.hpp"

using namespace combwalk;

// One DP transition at a given live radius; the sweep there is O(t^2).
static void BM_kernel_step_at_radius(benchmark::State& state) {
    const auto radius = state.range(0);
    for (auto _ : state) {
        state.PauseTiming();
        CombKernelDp dp({0, 0}, radius + 1, 1);
        dp.run_to(radius);
        state.ResumeTiming();
        dp.step();
        benchmark::DoNotOptimize(dp.current_step());
    }
}
BENCHMARK(BM_kernel_step_at_radius)->Arg(128)->Arg(512)->Arg(1024);

static void BM_kernel_full_run(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        CombKernelDp dp({0, 0}, n, static_cast<unsigned>(state.range(1)));
        dp.run_to(n);
        benchmark::DoNotOptimize(dp.backbone_mass());
    }
}
BENCHMARK(BM_kernel_full_run)
    ->Args({256, 1})
    ->Args({512, 1})
    ->Args({512, 2})
    ->Args({1024, 2});

static void BM_kernel_table_export(benchmark::State& state) {
    CombKernelDp dp({0, 0}, 256, 1);
    dp.run_to(256);
    for (auto _ : state) benchmark::DoNotOptimize(dp.table());
}
BENCHMARK(BM_kernel_table_export);

static void BM_kernel_exact_rational(benchmark::State& state) {
    for (auto _ : state) {
        CombKernelExact dp({0, 0});
        dp.run_to(32);
        benchmark::DoNotOptimize(dp.prob_at({0, 0}));
    }
}
BENCHMARK(BM_kernel_exact_rational);
