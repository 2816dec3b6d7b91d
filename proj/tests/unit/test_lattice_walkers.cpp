#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "../common/oracles.hpp"
#include "combwalk/lattice.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walkers.hpp"

using namespace combwalk;

TEST_CASE("zd_step rejects dimension zero and hits each direction") {
    RngStream rng(1, 2);
    CHECK_THROWS_AS(zd_step(0, rng), std::invalid_argument);

    // d=1: both signs with probability 1/2 (4 sigma band).
    std::int64_t plus = 0;
    const int n = 400'000;
    for (int i = 0; i < n; ++i)
        if (zd_step(1, rng).direction > 0) ++plus;
    CHECK(std::abs(plus / static_cast<double>(n) - 0.5) <
          4.0 * std::sqrt(0.25 / n));

    // d=2: all four outcomes near 1/4 (3 sigma each, per the stated rule).
    std::vector<std::int64_t> counts(4, 0);
    for (int i = 0; i < 1'000'000; ++i) {
        const auto s = zd_step(2, rng);
        ++counts[static_cast<std::size_t>(s.axis * 2 + (s.direction > 0 ? 0 : 1))];
    }
    for (auto c : counts) {
        const double f = static_cast<double>(c) / 1e6;
        CHECK(std::abs(f - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / 1e6));
    }

    // d=3: six outcomes, chi-square against uniform 1/6.
    std::vector<std::int64_t> six(6, 0);
    for (int i = 0; i < 600'000; ++i) {
        const auto s = zd_step(3, rng);
        ++six[static_cast<std::size_t>(s.axis * 2 + (s.direction > 0 ? 0 : 1))];
    }
    CHECK(chi_square_gof(six, std::vector<double>(6, 1.0 / 6.0), 0.001).pass);
}

TEST_CASE("simulate_zd basics") {
    const auto empty = simulate_zd(2, 0, RngStream(1, 3));
    CHECK(empty.checkpoints.size() == 1);
    CHECK(empty.checkpoints[0].time == 0);
    CHECK(empty.checkpoints[0].state == ZdPoint(2));

    // Full record: parity and unit steps hold pathwise.
    const auto traj = simulate_zd(2, 501, RngStream(1, 4), CheckpointSchedule::full());
    REQUIRE(traj.full_path.size() == 502);
    for (std::size_t j = 1; j < traj.full_path.size(); ++j) {
        std::int64_t l1 = 0, coord_sum = 0;
        for (std::size_t i = 0; i < 2; ++i) {
            l1 += std::abs(traj.full_path[j].coords[i] -
                           traj.full_path[j - 1].coords[i]);
            coord_sum += traj.full_path[j].coords[i];
        }
        CHECK(l1 == 1);
        CHECK(((coord_sum - static_cast<std::int64_t>(j)) & 1) == 0);
    }

    // Checkpoint times strictly increase.
    const auto cps = simulate_zd(1, 1000, RngStream(1, 5)).checkpoints;
    for (std::size_t i = 1; i < cps.size(); ++i)
        CHECK(cps[i].time > cps[i - 1].time);
}

TEST_CASE("E S(n)^2 = n for the line walk") {
    const std::int64_t n = 4096, reps = 20'000;
    double sum_sq = 0.0;
    for (std::int64_t r = 0; r < reps; ++r) {
        ZdWalker w(1, RngStream(9, static_cast<std::uint64_t>(r)));
        for (std::int64_t i = 0; i < n; ++i) w.step();
        const double x = static_cast<double>(w.position().coords[0]);
        sum_sq += x * x;
    }
    const double mean = sum_sq / static_cast<double>(reps);
    // Var(S^2) ~ 2n^2: four sigma on the sample mean.
    const double tol = 4.0 * std::sqrt(2.0 / static_cast<double>(reps)) *
                       static_cast<double>(n);
    CHECK(std::abs(mean - static_cast<double>(n)) < tol);
}

TEST_CASE("local_time_zero counts zeros of a full record") {
    Trajectory<ZdPoint> traj;
    traj.full_path = {ZdPoint{0}, ZdPoint{1}, ZdPoint{0}, ZdPoint{1}, ZdPoint{0}};
    traj.steps = 4;
    CHECK(local_time_zero(traj) == 2);  // steps +1,-1,+1,-1

    Trajectory<ZdPoint> never;
    never.full_path = {ZdPoint{0}, ZdPoint{1}, ZdPoint{2}, ZdPoint{3}};
    CHECK(local_time_zero(never) == 0);

    Trajectory<ZdPoint> sparse;
    sparse.checkpoints.push_back({0, ZdPoint{0}});
    CHECK_THROWS_AS(local_time_zero(sparse), std::invalid_argument);

    Trajectory<ZdPoint> wrong_d;
    wrong_d.full_path = {ZdPoint(2), ZdPoint(2)};
    CHECK_THROWS_AS(local_time_zero(wrong_d), std::invalid_argument);
}

TEST_CASE("walker local time tracks the full-record count") {
    const auto traj = simulate_zd(1, 2000, RngStream(10, 1), CheckpointSchedule::full());
    CHECK(traj.local_time_zero == local_time_zero(traj));
}

TEST_CASE("E xi(0,n) matches the exact convolution") {
    const std::int64_t n = 4096, reps = 20'000;
    std::int64_t total = 0;
    for (std::int64_t r = 0; r < reps; ++r) {
        ZdWalker w(1, RngStream(11, static_cast<std::uint64_t>(r)));
        for (std::int64_t i = 0; i < n; ++i) w.step();
        total += w.local_time_zero();
    }
    const double mean = static_cast<double>(total) / static_cast<double>(reps);
    const double exact = testoracle::expected_local_time(n);  // 50.0739614...
    CHECK(exact == doctest::Approx(50.07396143532583).epsilon(1e-12));
    CHECK(std::abs(mean - exact) / exact < 0.05);
}

TEST_CASE("comb_step_direct matches the degree-weighted kernel") {
    RngStream rng(12, 1);
    // From a backbone vertex: four neighbors, 1/4 each.
    std::vector<std::int64_t> counts(4, 0);
    for (int i = 0; i < 400'000; ++i) {
        const auto v = comb_step_direct({3, 0}, rng);
        if (v == CombVertex{2, 0}) ++counts[0];
        else if (v == CombVertex{4, 0}) ++counts[1];
        else if (v == CombVertex{3, -1}) ++counts[2];
        else if (v == CombVertex{3, 1}) ++counts[3];
        else FAIL("stepped to a non-neighbor");
    }
    CHECK(chi_square_gof(counts, std::vector<double>(4, 0.25), 0.001).pass);

    // From a tooth vertex: up/down, 1/2 each.
    std::int64_t up = 0;
    for (int i = 0; i < 400'000; ++i) {
        const auto v = comb_step_direct({3, 2}, rng);
        const bool is_up = v == CombVertex{3, 3};
        if (!is_up) REQUIRE(v == CombVertex{3, 1});
        if (is_up) ++up;
    }
    CHECK(std::abs(up / 4e5 - 0.5) < 4.0 * std::sqrt(0.25 / 4e5));
}

TEST_CASE("comb degree and neighbors") {
    for (std::int64_t x = -10; x <= 10; ++x)
        for (std::int64_t y = -10; y <= 10; ++y) {
            const CombVertex v{x, y};
            const auto nb = comb_neighbors(v);
            CHECK(static_cast<int>(nb.size()) == comb_degree(v));
            CHECK(comb_degree(v) == (y == 0 ? 4 : 2));
        }
}

TEST_CASE("simulate_comb_direct counters and parity") {
    const auto empty = simulate_comb_direct(0, RngStream(13, 1));
    CHECK(empty.checkpoints.front().state == CombVertex{0, 0});
    CHECK(empty.horizontal_steps == 0);
    CHECK(empty.vertical_steps == 0);

    const auto traj =
        simulate_comb_direct(4096, RngStream(13, 2), CheckpointSchedule::full());
    CHECK(traj.horizontal_steps + traj.vertical_steps == 4096);
    std::int64_t recomputed_lt = 0, max_abs_x = 0;
    for (std::size_t j = 1; j < traj.full_path.size(); ++j) {
        const auto& prev = traj.full_path[j - 1];
        const auto& cur = traj.full_path[j];
        const auto dx = std::abs(cur.x - prev.x);
        const auto dy = std::abs(cur.y - prev.y);
        CHECK(dx + dy == 1);             // lattice neighbors
        if (dx == 1) CHECK(prev.y == 0);  // horizontal only on the backbone
        CHECK(((cur.x + cur.y + static_cast<std::int64_t>(j)) & 1) == 0);
        if (dy == 1 && cur.y == 0) ++recomputed_lt;
        max_abs_x = std::max(max_abs_x, std::abs(cur.x));
    }
    CHECK(traj.local_time_zero == recomputed_lt);
    CHECK(traj.max_abs_horizontal == max_abs_x);
}

TEST_CASE("constructed walk bookkeeping") {
    const auto run = simulate_comb_constructed(50'000, 14, 5,
                                               CheckpointSchedule::full());
    const auto& traj = run.trajectory;
    CHECK(traj.horizontal_steps + traj.vertical_steps == 50'000);
    // H_n never exceeds the sum of the geometric runs drawn so far.
    CHECK(traj.horizontal_steps <= run.clock.total_run_length());
    // Return times live on the driver clock, strictly increasing.
    for (std::size_t i = 1; i < run.clock.returns.size(); ++i)
        CHECK(run.clock.returns[i] > run.clock.returns[i - 1]);
    if (!run.clock.returns.empty())
        CHECK(run.clock.returns.back() <= traj.vertical_steps);
    // Local time of the driver equals the number of completed returns.
    CHECK(traj.local_time_zero ==
          static_cast<std::int64_t>(run.clock.returns.size()));
    // Path adjacency on the comb.
    for (std::size_t j = 1; j < traj.full_path.size(); ++j) {
        const auto dx = std::abs(traj.full_path[j].x - traj.full_path[j - 1].x);
        const auto dy = std::abs(traj.full_path[j].y - traj.full_path[j - 1].y);
        CHECK(dx + dy == 1);
    }
}

TEST_CASE("a zero-length first run starts with a vertical step") {
    // Scan stream ids for one whose first geometric draw is zero; the
    // first move must then be vertical.
    for (std::uint64_t sid = 0; sid < 64; ++sid) {
        CombWalkerConstructed w(99, sid);
        if (w.return_clock().run_lengths.front() == 0) {
            w.step();
            CHECK(w.position().x == 0);
            CHECK(w.position().y != 0);
            return;
        }
    }
    FAIL("no zero first run among 64 streams (p ~ 2^-64)");
}

TEST_CASE("construction equivalence on endpoint marginals, every n <= 64") {
    // One pool of trajectories, compared at every horizon: the direct and
    // the interleaved construction must agree in law at each n.
    const std::int64_t samples = 30'000, n_max = 64;
    std::vector<std::map<std::pair<std::int64_t, std::int64_t>,
                         std::pair<std::int64_t, std::int64_t>>>
        cells(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t s = 0; s < samples; ++s) {
        CombWalkerDirect d(RngStream(15, derive_stream_id(1, 0, static_cast<std::uint64_t>(s))));
        CombWalkerConstructed c(15, derive_stream_id(2, 0, static_cast<std::uint64_t>(s)));
        for (int n = 1; n <= n_max; ++n) {
            d.step();
            c.step();
            ++cells[static_cast<std::size_t>(n)][{d.position().x, d.position().y}].first;
            ++cells[static_cast<std::size_t>(n)][{c.position().x, c.position().y}].second;
        }
    }
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> a, b;
        for (const auto& [v, count] : cells[static_cast<std::size_t>(n)]) {
            a.push_back(count.first);
            b.push_back(count.second);
        }
        const auto t = chi_square_two_sample(a, b, 0.001);
        CAPTURE(n);
        CHECK(t.pass);
    }
}

TEST_CASE("identical stream triples give bit-identical trajectories") {
    const auto t1 = simulate_comb_direct(5000, RngStream(16, 8));
    const auto t2 = simulate_comb_direct(5000, RngStream(16, 8));
    REQUIRE(t1.checkpoints.size() == t2.checkpoints.size());
    for (std::size_t i = 0; i < t1.checkpoints.size(); ++i) {
        CHECK(t1.checkpoints[i].time == t2.checkpoints[i].time);
        CHECK(t1.checkpoints[i].state == t2.checkpoints[i].state);
    }
    const auto t3 = simulate_comb_direct(5000, RngStream(16, 9));
    CHECK(t3.checkpoints.back().state != t1.checkpoints.back().state);
}

TEST_CASE("hitting-time simulator") {
    RngStream rng(17, 1);
    CHECK_THROWS_AS(simulate_hitting_time(0, 10, rng), std::invalid_argument);
    // P(beta(1) = 1) = 1/2.
    std::int64_t ones = 0;
    const int n = 200'000;
    for (int i = 0; i < n; ++i)
        if (simulate_hitting_time(1, 64, rng) == 1) ++ones;
    CHECK(std::abs(ones / static_cast<double>(n) - 0.5) <
          4.0 * std::sqrt(0.25 / n));
    // Horizon cap reports censoring.
    bool censored = false;
    for (int i = 0; i < 1000 && !censored; ++i)
        censored = simulate_hitting_time(30, 10, rng) == -1;
    CHECK(censored);
}
