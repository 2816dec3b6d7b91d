#include <doctest.h>

#include <cmath>

#include "../common/oracles.hpp"
#include "combwalk/experiments.hpp"

using namespace combwalk;

namespace {

const ReportRow* find_row(const ExperimentReport& rep, const std::string& name) {
    for (const auto& r : rep.rows)
        if (r.statistic == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("dyadic checkpoints") {
    const auto cps = dyadic_checkpoints(100, 16);
    CHECK(cps == std::vector<std::int64_t>{16, 32, 64, 100});
    const auto exact = dyadic_checkpoints(64, 16);
    CHECK(exact == std::vector<std::int64_t>{16, 32, 64});
    CHECK_THROWS_AS(dyadic_checkpoints(8, 16), std::invalid_argument);
}

TEST_CASE("series classification against analytic ground truth") {
    // Power family: geometric reduction, convergent for alpha, p > 0.
    for (double alpha : {0.05, 0.1, 0.3, 0.5, 1.0})
        for (int p : {1, 2, 3})
            CHECK(series_classify({SeriesFamily::power, alpha, p}) ==
                  SeriesClass::convergent);
    // Log-power family: p-series in the dyadic index.
    CHECK(series_classify({SeriesFamily::logpower, 1.0, 1}) ==
          SeriesClass::divergent);  // harmonic
    CHECK(series_classify({SeriesFamily::logpower, 2.0, 1}) ==
          SeriesClass::convergent);
    CHECK(series_classify({SeriesFamily::logpower, 0.5, 2}) ==
          SeriesClass::divergent);  // beta p = 1 exactly
    CHECK(series_classify({SeriesFamily::logpower, 0.5, 3}) ==
          SeriesClass::convergent);
    CHECK(series_classify({SeriesFamily::power, 0.0, 2}) ==
          SeriesClass::divergent);  // constant a
    CHECK(to_string(SeriesClass::convergent) == "convergent");
}

TEST_CASE("degenerate exponent raises the documented error") {
    CHECK_THROWS_AS(series_classify({SeriesFamily::power, 0.5, -1}),
                    CriterionDegenerateError);  // K=2, d=1: p = Kd-d-2 = -1
    CHECK_THROWS_AS(series_classify({SeriesFamily::logpower, 1.0, 0}),
                    CriterionDegenerateError);
}

TEST_CASE("increasing a(t) is rejected") {
    CHECK_THROWS_AS(series_classify({SeriesFamily::power, -0.5, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_classify({SeriesFamily::logpower, -1.0, 1}),
                    std::invalid_argument);
}

TEST_CASE("exact pairwise-collision expectation") {
    CHECK(expected_pair_collisions_zd(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(expected_pair_collisions_zd(2) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(expected_pair_collisions_zd(3) == doctest::Approx(1.1875).epsilon(1e-15));
    CHECK(expected_pair_collisions_zd(10'000) ==
          doctest::Approx(111.84214806972071).epsilon(1e-12));
}

TEST_CASE("exact tails used as verdict targets") {
    // Negative-binomial tail of a geometric sum, vs an independent
    // computation: P(sum_100 G >= 150) = 7.40583066564e-4.
    CHECK(exact_geometric_sum_tail(100, 150) ==
          doctest::Approx(7.405830665641089e-4).epsilon(1e-9));
    // Local-time tail vs exhaustive enumeration at n=10.
    const auto hist = testoracle::local_time_distribution(10);
    double tail3 = 0.0;
    for (const auto& [k, c] : hist)
        if (k >= 3) tail3 += static_cast<double>(c);
    tail3 /= 1024.0;
    CHECK(tail3 == doctest::Approx(0.2890625).epsilon(1e-15));
    CHECK(exact_local_time_tail(10, 3) == doctest::Approx(tail3).epsilon(1e-12));
    CHECK(exact_local_time_tail(10, 1) ==
          doctest::Approx(0.75390625).epsilon(1e-12));
    CHECK(exact_local_time_tail(10, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(exact_local_time_tail(11, 1), std::invalid_argument);
}

TEST_CASE("lil normalizers and targets") {
    LilConfig cfg;
    cfg.graph = LilGraph::zd;
    cfg.statistic = LilStatistic::d_k;
    cfg.d = 1;
    CHECK(lil_target_constant(cfg) == 2.0);
    cfg.d = 4;
    CHECK(lil_target_constant(cfg) == 1.0);
    cfg.graph = LilGraph::comb;
    cfg.statistic = LilStatistic::abs_c1;
    CHECK(lil_target_constant(cfg) ==
          doctest::Approx(1.0433897200488582).epsilon(1e-14));
    cfg.statistic = LilStatistic::abs_c2;
    CHECK(lil_target_constant(cfg) == 1.0);

    const double m = 65536.0;
    const double ll = std::log(std::log(m));
    CHECK(lil_normalizer(LilGraph::zd, LilStatistic::d_k, 65536) ==
          doctest::Approx(std::sqrt(m * ll)).epsilon(1e-14));
    CHECK(lil_normalizer(LilGraph::comb, LilStatistic::d_k, 65536) ==
          doctest::Approx(2.0 * std::sqrt(m * ll)).epsilon(1e-14));
    CHECK(lil_normalizer(LilGraph::comb, LilStatistic::abs_c2, 65536) ==
          doctest::Approx(std::sqrt(2.0 * m * ll)).epsilon(1e-14));
    CHECK(lil_normalizer(LilGraph::comb, LilStatistic::abs_c1, 65536) ==
          doctest::Approx(std::pow(m, 0.25) * std::pow(ll, 0.75)).epsilon(1e-14));
}

TEST_CASE("lil profile: validation, determinism, monotone running max") {
    LilConfig bad;
    bad.n_max = 100;
    CHECK_THROWS_AS(lil_profile(bad), std::invalid_argument);
    bad.n_max = 10'000;
    bad.K = 1;
    CHECK_THROWS_AS(lil_profile(bad), std::invalid_argument);
    bad.K = 2;
    bad.graph = LilGraph::zd;
    bad.statistic = LilStatistic::abs_c2;
    CHECK_THROWS_AS(lil_profile(bad), std::invalid_argument);

    LilConfig cfg;
    cfg.graph = LilGraph::comb;
    cfg.statistic = LilStatistic::abs_c2;
    cfg.n_max = 4096;
    cfg.replicates = 24;
    cfg.seed = 51;
    const auto p1 = lil_profile(cfg);
    // Ensemble statistics are nondecreasing (running max pathwise).
    for (std::size_t c = 1; c < p1.checkpoints.size(); ++c) {
        CHECK(p1.ensemble_median[c] >= p1.ensemble_median[c - 1]);
        CHECK(p1.ensemble_max[c] >= p1.ensemble_max[c - 1]);
    }
    CHECK(p1.ensemble_max.back() >= p1.ensemble_median.back());
    // Bit-identical across repeat runs and thread counts.
    cfg.threads = 2;
    const auto p2 = lil_profile(cfg);
    CHECK(p1.final_running_max == p2.final_running_max);
    CHECK(p1.ensemble_median == p2.ensemble_median);

    const auto rep = lil_profile_report(cfg);
    CHECK(find_row(rep, "comb_abs_c2_running_max_monotone") != nullptr);
    CHECK(find_row(rep, "comb_abs_c2_median_band_lower") != nullptr);
}

TEST_CASE("collision growth at small scale matches the exact mean") {
    CollisionGrowthConfig cfg;
    cfg.graph = LilGraph::zd;
    cfg.K = 2;
    cfg.n_max = 512;
    cfg.replicates = 6000;
    cfg.late_window_start = 256;
    cfg.seed = 52;
    cfg.threads = 2;
    const auto rep = collision_growth_experiment(cfg);
    const auto* row = find_row(rep, "mean_pairwise_vs_exact");
    REQUIRE(row != nullptr);
    CHECK(row->target ==
          doctest::Approx(expected_pair_collisions_zd(512)).epsilon(1e-12));
    CHECK(row->verdict == Verdict::pass);
    CHECK_THROWS_AS(collision_growth_experiment(CollisionGrowthConfig{
                        .graph = LilGraph::zd, .d = 1, .K = 1}),
                    std::invalid_argument);
}

TEST_CASE("comb pairwise collisions die out (small horizon)") {
    CollisionGrowthConfig cfg;
    cfg.graph = LilGraph::comb;
    cfg.K = 2;
    cfg.n_max = 32'768;
    cfg.replicates = 200;
    cfg.late_window_start = 4096;
    cfg.seed = 53;
    cfg.threads = 2;
    const auto rep = collision_growth_experiment(cfg);
    const auto* row = find_row(rep, "late_pairwise_median_zero");
    REQUIRE(row != nullptr);
    CHECK(row->verdict == Verdict::pass);
}

TEST_CASE("backbone coincidence counts grow like the log target") {
    BackboneCoincidenceConfig cfg;
    cfg.n_max = 65'536;
    cfg.replicates = 200;
    cfg.seed = 54;
    cfg.threads = 2;
    const auto rep = backbone_coincidence_experiment(cfg);
    const auto* row = find_row(rep, "mean_vs_log_growth");
    REQUIRE(row != nullptr);
    CHECK(row->target ==
          doctest::Approx((2.0 / M_PI) * std::log(65536.0)).epsilon(1e-12));
    CHECK(row->verdict == Verdict::pass);
    CHECK(find_row(rep, "mean_growth")->verdict == Verdict::pass);
}

TEST_CASE("distance cdf experiment at reduced scale") {
    DistanceCdfConfig cfg;
    cfg.K = 2;
    cfg.n = 2048;
    cfg.replicates = 20'000;
    cfg.ks_cap = 0.03;
    cfg.seed = 55;
    cfg.threads = 2;
    const auto rep = distance_cdf_experiment(cfg);
    const auto* ks = find_row(rep, "ks_distance");
    REQUIRE(ks != nullptr);
    CHECK(ks->verdict == Verdict::pass);
    const auto* zero = find_row(rep, "dk_zero_fraction");
    REQUIRE(zero != nullptr);
    // Collision frequency at n: P(S1(n) = S2(n)) ~ 1/sqrt(pi n) ~ 0.0125.
    CHECK(zero->value < 0.05);
    CHECK_THROWS_AS(distance_cdf_experiment(DistanceCdfConfig{.K = 1}),
                    std::invalid_argument);
}

TEST_CASE("lower class experiment mechanics at reduced scale") {
    LowerClassConfig cfg;
    cfg.n_max = 65'536;
    cfg.replicates = 1500;
    cfg.slope_fit_min = 32;
    cfg.seed = 56;
    cfg.threads = 2;
    const auto rep = lower_class_experiment(cfg);
    CHECK(find_row(rep, "final_distance_above_fraction")->verdict == Verdict::pass);
    CHECK(find_row(rep, "upper_envelope_ever_fraction")->verdict == Verdict::pass);
    CHECK(find_row(rep, "diff_teeth_decay_slope") != nullptr);
    CHECK_THROWS_AS(lower_class_experiment(LowerClassConfig{.epsilon = 0.2}),
                    std::invalid_argument);
    // Report reproducibility across thread counts.
    cfg.threads = 1;
    const auto rep1 = lower_class_experiment(cfg);
    REQUIRE(rep1.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        CHECK(rep1.rows[i].value == rep.rows[i].value);
}

TEST_CASE("tail bound checks at reduced scale") {
    TailBoundConfig cfg;
    cfg.geometric_samples = 150'000;
    cfg.local_time_n = 4096;
    cfg.local_time_samples = 40'000;
    cfg.seed = 57;
    cfg.threads = 2;
    const auto rep = tail_bound_checks(cfg);
    CHECK(find_row(rep, "max_partial_sum_tail_vs_bound")->verdict == Verdict::pass);
    CHECK(find_row(rep, "geom_sum_tail_vs_exact")->verdict == Verdict::pass);
    CHECK(find_row(rep, "geom_sum_tail_vs_bound")->verdict == Verdict::pass);
    const auto* slope = find_row(rep, "local_time_tail_slope");
    REQUIRE(slope != nullptr);
    CHECK(slope->verdict == Verdict::pass);
    // The exact-law slope target at finite n sits above the n->infinity
    // normal-limit value of 1 (in absolute value).
    CHECK(slope->target < -1.0);
    CHECK_THROWS_AS(tail_bound_checks(TailBoundConfig{.local_time_n = 99}),
                    std::invalid_argument);
}

TEST_CASE("report all_pass reflects verdict rows only") {
    ExperimentReport rep;
    rep.add_info("x", 0, 0, 1.0);
    CHECK(rep.all_pass());
    rep.add_verdict("good", 0, 0, 1.0, 1.0, 0.0, true);
    CHECK(rep.all_pass());
    rep.add_verdict("bad", 0, 0, 0.0, 1.0, 0.0, false);
    CHECK_FALSE(rep.all_pass());
}
