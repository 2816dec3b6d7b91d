#include <benchmark/benchmark.h>

#include <vector>

#include "combwalk/metrics.hpp"
#include "combwalk/rng.hpp"

using namespace combwalk;

static void BM_comb_distance_closed_form(benchmark::State& state) {
    RngStream rng(1, 1);
    std::vector<CombVertex> pts(1024);
    for (auto& p : pts)
        p = {static_cast<std::int64_t>(rng.next_below(2001)) - 1000,
             static_cast<std::int64_t>(rng.next_below(2001)) - 1000};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            comb_graph_distance(pts[i & 1023], pts[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_comb_distance_closed_form);

static void BM_comb_distance_bfs(benchmark::State& state) {
    RngStream rng(1, 2);
    std::vector<CombVertex> pts(64);
    for (auto& p : pts)
        p = {static_cast<std::int64_t>(rng.next_below(9)) - 4,
             static_cast<std::int64_t>(rng.next_below(9)) - 4};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            comb_graph_distance_bfs(pts[i & 63], pts[(i + 1) & 63], 40));
        ++i;
    }
}
BENCHMARK(BM_comb_distance_bfs);

static void BM_max_pairwise_distance(benchmark::State& state) {
    RngStream rng(1, 3);
    std::vector<ZdPoint> pts;
    for (std::int64_t i = 0; i < state.range(0); ++i)
        pts.push_back(ZdPoint{static_cast<std::int64_t>(rng.next_below(2000)) - 1000});
    for (auto _ : state) benchmark::DoNotOptimize(max_pairwise_distance(pts));
}
BENCHMARK(BM_max_pairwise_distance)->Arg(2)->Arg(4)->Arg(8);
