#include <benchmark/benchmark.h>

#include "combwalk/rng.hpp"

using namespace combwalk;

static void BM_next_u64(benchmark::State& state) {
    RngStream rng(1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_u64());
}
BENCHMARK(BM_next_u64);

static void BM_next_unit(benchmark::State& state) {
    RngStream rng(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_unit());
}
BENCHMARK(BM_next_unit);

static void BM_next_below_6(benchmark::State& state) {
    RngStream rng(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_below(6));
}
BENCHMARK(BM_next_below_6);

static void BM_sample_geometric(benchmark::State& state) {
    RngStream rng(1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(sample_geometric(rng));
}
BENCHMARK(BM_sample_geometric);

static void BM_next_normal(benchmark::State& state) {
    RngStream rng(1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_normal());
}
BENCHMARK(BM_next_normal);
