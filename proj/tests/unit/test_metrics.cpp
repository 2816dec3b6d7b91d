#include <doctest.h>

#include <cmath>
#include <vector>

#include "combwalk/metrics.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/walkers.hpp"

using namespace combwalk;

TEST_CASE("comb graph distance closed form") {
    CHECK(comb_graph_distance({0, 0}, {0, 5}) == 5);
    CHECK(comb_graph_distance({2, 3}, {2, 7}) == 4);
    CHECK(comb_graph_distance({1, 2}, {3, 1}) == 5);  // 2 + 2 + 1
    CHECK(comb_graph_distance({-4, -3}, {-4, 2}) == 5);
    CHECK(comb_graph_distance({0, 0}, {0, 0}) == 0);
}

TEST_CASE("BFS oracle agrees with the closed form on a box") {
    CHECK(comb_graph_distance_bfs({0, 0}, {0, 0}, 8) == 0);
    CHECK(comb_graph_distance_bfs({0, 1}, {1, 1}, 8) == 3);  // down, across, up
    for (std::int64_t ux = -5; ux <= 5; ++ux)
        for (std::int64_t uy = -5; uy <= 5; ++uy)
            for (std::int64_t vx = -5; vx <= 5; ++vx)
                for (std::int64_t vy = -5; vy <= 5; ++vy) {
                    const CombVertex u{ux, uy}, v{vx, vy};
                    REQUIRE(comb_graph_distance_bfs(u, v, 48) ==
                            comb_graph_distance(u, v));
                }
}

TEST_CASE("BFS respects its radius cap") {
    CHECK_THROWS_AS(comb_graph_distance_bfs({0, 0}, {10, 0}, 5),
                    std::length_error);
}

TEST_CASE("euclidean distance") {
    CHECK(euclidean_distance(ZdPoint{3}, ZdPoint{-2}) == 5.0);
    CHECK(euclidean_distance(ZdPoint{0, 0}, ZdPoint{3, 4}) == 5.0);
    CHECK(euclidean_distance(ZdPoint{7, -1}, ZdPoint{7, -1}) == 0.0);
    CHECK_THROWS_AS(euclidean_distance(ZdPoint{1}, ZdPoint{1, 2}),
                    std::invalid_argument);
}

TEST_CASE("max pairwise distance") {
    const std::vector<ZdPoint> triple{ZdPoint{0}, ZdPoint{4}, ZdPoint{9}};
    CHECK(max_pairwise_distance(triple) == 9.0);
    const std::vector<ZdPoint> equal{ZdPoint{2, 2}, ZdPoint{2, 2}, ZdPoint{2, 2}};
    CHECK(max_pairwise_distance(equal) == 0.0);
    const std::vector<ZdPoint> pair{ZdPoint{-3}, ZdPoint{4}};
    CHECK(max_pairwise_distance(pair) == 7.0);
    CHECK_THROWS_AS(max_pairwise_distance(std::vector<ZdPoint>{ZdPoint{0}}),
                    std::invalid_argument);

    const std::vector<CombVertex> comb{{0, 2}, {1, 1}, {0, -1}};
    // pairs: (0,2)-(1,1): 2+1+1=4, (0,2)-(0,-1): 3, (1,1)-(0,-1): 1+1+1=3.
    CHECK(max_pairwise_comb_distance(comb) == 4);

    const ZdEnsembleSnapshot zsnap{7, triple};
    CHECK(max_pairwise_distance(zsnap) == 9.0);
    const CombEnsembleSnapshot csnap{7, comb};
    CHECK(max_pairwise_comb_distance(csnap) == 4);
}

TEST_CASE("comb metric axioms on sampled triples") {
    RngStream rng(21, 1);
    for (int i = 0; i < 10'000; ++i) {
        auto rv = [&]() {
            return CombVertex{static_cast<std::int64_t>(rng.next_below(41)) - 20,
                              static_cast<std::int64_t>(rng.next_below(41)) - 20};
        };
        const auto a = rv(), b = rv(), c = rv();
        CHECK(comb_graph_distance(a, b) == comb_graph_distance(b, a));
        CHECK(comb_graph_distance(a, b) <=
              comb_graph_distance(a, c) + comb_graph_distance(c, b));
        CHECK((comb_graph_distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("collision detection on forced and random paths") {
    // Identical streams force a collision at every step.
    const auto t1 = simulate_comb_direct(128, RngStream(22, 1),
                                         CheckpointSchedule::full());
    const auto t2 = simulate_comb_direct(128, RngStream(22, 1),
                                         CheckpointSchedule::full());
    const std::vector<Trajectory<CombVertex>> forced{t1, t2};
    const auto events = detect_collisions(forced, CollisionMode::pairwise);
    CHECK(events.size() == 128);
    CHECK(detect_collisions(forced, CollisionMode::full).size() == 128);

    // Independent walkers: full events are a subset of every pair's events.
    std::vector<Trajectory<CombVertex>> walkers;
    for (std::uint64_t i = 0; i < 3; ++i)
        walkers.push_back(simulate_comb_direct(4096, RngStream(23, i),
                                               CheckpointSchedule::full()));
    const auto full = detect_collisions(walkers, CollisionMode::full);
    const auto pairwise = detect_collisions(walkers, CollisionMode::pairwise);
    CHECK(full.size() <= pairwise.size());
    for (const auto& e : full) {
        bool all_equal = true;
        for (const auto& w : walkers)
            all_equal = all_equal &&
                        w.full_path[static_cast<std::size_t>(e.time)] ==
                            walkers[0].full_path[static_cast<std::size_t>(e.time)];
        CHECK(all_equal);
    }
    for (const auto& e : pairwise) {
        CHECK(walkers[static_cast<std::size_t>(e.walker_i)]
                  .full_path[static_cast<std::size_t>(e.time)] ==
              walkers[static_cast<std::size_t>(e.walker_j)]
                  .full_path[static_cast<std::size_t>(e.time)]);
    }
}

TEST_CASE("collision detection input validation") {
    const auto a = simulate_comb_direct(16, RngStream(24, 1),
                                        CheckpointSchedule::full());
    const auto b = simulate_comb_direct(8, RngStream(24, 2),
                                        CheckpointSchedule::full());
    const std::vector<Trajectory<CombVertex>> mismatched{a, b};
    CHECK_THROWS_AS(detect_collisions(mismatched, CollisionMode::pairwise),
                    std::invalid_argument);

    const auto sparse = simulate_comb_direct(16, RngStream(24, 3));
    const std::vector<Trajectory<CombVertex>> no_record{sparse, sparse};
    CHECK_THROWS_AS(detect_collisions(no_record, CollisionMode::pairwise),
                    std::invalid_argument);

    const std::vector<Trajectory<CombVertex>> lone{a};
    CHECK_THROWS_AS(detect_collisions(lone, CollisionMode::full),
                    std::invalid_argument);
}

TEST_CASE("D_K is permutation-invariant and monotone in K") {
    RngStream rng(25, 1);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<ZdPoint> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(ZdPoint{static_cast<std::int64_t>(rng.next_below(21)) - 10});
        const double d2 = max_pairwise_distance(std::span<const ZdPoint>(pts.data(), 2));
        const double d3 = max_pairwise_distance(std::span<const ZdPoint>(pts.data(), 3));
        const double d4 = max_pairwise_distance(std::span<const ZdPoint>(pts.data(), 4));
        CHECK(d2 <= d3);
        CHECK(d3 <= d4);
        const std::vector<ZdPoint> perm{pts[3], pts[1], pts[0], pts[2]};
        CHECK(max_pairwise_distance(perm) == d4);
    }
}
