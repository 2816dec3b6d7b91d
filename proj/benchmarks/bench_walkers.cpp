#include <benchmark/benchmark.h>

#include "combwalk/walkers.hpp"

using namespace combwalk;

static void BM_zd_walker_step(benchmark::State& state) {
    ZdWalker w(static_cast<std::size_t>(state.range(0)), RngStream(1, 1));
    for (auto _ : state) {
        w.step();
        benchmark::DoNotOptimize(w.position().coords[0]);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_zd_walker_step)->Arg(1)->Arg(2)->Arg(3);

static void BM_comb_direct_step(benchmark::State& state) {
    CombWalkerDirect w(RngStream(1, 2));
    for (auto _ : state) {
        w.step();
        benchmark::DoNotOptimize(w.position());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_comb_direct_step);

static void BM_comb_constructed_step(benchmark::State& state) {
    CombWalkerConstructed w(1, 3);
    for (auto _ : state) {
        w.step();
        benchmark::DoNotOptimize(w.position());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_comb_constructed_step);

static void BM_simulate_comb_direct_4096(benchmark::State& state) {
    std::uint64_t sid = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            simulate_comb_direct(4096, RngStream(1, sid++)));
    }
    state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_simulate_comb_direct_4096);
