#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "combwalk/rng.hpp"
#include "combwalk/special.hpp"
#include "combwalk/stats.hpp"

using namespace combwalk;

TEST_CASE("chi-square GOF basics") {
    // Two bins, 60/40 observed vs fair: statistic 4, p = erfc(sqrt 2).
    const std::vector<std::int64_t> obs{60, 40};
    const std::vector<double> probs{0.5, 0.5};
    const auto t = chi_square_gof(obs, probs, 0.001);
    CHECK(t.statistic == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(t.df == 1);
    CHECK(t.p_value == doctest::Approx(0.045500263896358396).epsilon(1e-10));
    CHECK(t.pass);

    CHECK_THROWS_AS(chi_square_gof(std::vector<std::int64_t>{},
                                   std::vector<double>{}, 0.001),
                    std::invalid_argument);
    // Degenerate binning: everything pooled into a single bin.
    CHECK_THROWS_AS(chi_square_gof(std::vector<std::int64_t>{1, 1},
                                   std::vector<double>{0.5, 0.5}, 0.001),
                    std::invalid_argument);
}

TEST_CASE("two-sample chi-square of a sample against itself is zero") {
    const std::vector<std::int64_t> a{100, 250, 650, 20};
    const auto t = chi_square_two_sample(a, a, 0.001);
    CHECK(t.statistic == doctest::Approx(0.0));
    CHECK(t.pass);
}

TEST_CASE("two-sample chi-square flags clearly different histograms") {
    const std::vector<std::int64_t> a{1000, 1000, 1000};
    const std::vector<std::int64_t> b{1500, 800, 700};
    CHECK_FALSE(chi_square_two_sample(a, b, 0.001).pass);
}

TEST_CASE("p-values are roughly uniform under the null") {
    // Draw from the exact geometric pmf and test against it; over 200
    // repetitions the fraction with p < 0.05 stays near 5%.
    std::vector<double> probs(32);
    for (int k = 0; k < 32; ++k) probs[static_cast<std::size_t>(k)] = std::ldexp(1.0, -k - 1);
    probs[31] += std::ldexp(1.0, -32);  // fold the tail into the last bin
    RngStream rng(77, 1);
    int low_p = 0;
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<std::int64_t> counts(32, 0);
        for (int i = 0; i < 2000; ++i) {
            auto g = sample_geometric(rng);
            if (g > 31) g = 31;
            ++counts[static_cast<std::size_t>(g)];
        }
        if (chi_square_gof(counts, probs, 0.001).p_value < 0.05) ++low_p;
    }
    const double frac = low_p / 200.0;
    CHECK(frac >= 0.01);
    CHECK(frac <= 0.12);
}

TEST_CASE("KS distance of normal draws against Phi") {
    RngStream rng(5, 9);
    std::vector<double> samples(100'000);
    for (auto& s : samples) s = rng.next_normal();
    std::sort(samples.begin(), samples.end());
    const auto t = ks_test(samples, [](double x) { return normal_cdf(x); }, 0.01);
    CHECK(t.statistic < 0.01);
    CHECK(t.pass);
}

TEST_CASE("KS distance detects a wrong scale") {
    RngStream rng(5, 10);
    std::vector<double> samples(20'000);
    for (auto& s : samples) s = 1.3 * rng.next_normal();
    std::sort(samples.begin(), samples.end());
    CHECK_FALSE(ks_test(samples, [](double x) { return normal_cdf(x); }, 0.02).pass);
}

TEST_CASE("line fit recovers exact coefficients") {
    const std::vector<double> xs{1, 2, 3, 4, 5};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(-2.5 * x + 0.75);
    const auto fit = fit_line(xs, ys);
    CHECK(fit.slope == doctest::Approx(-2.5).epsilon(1e-13));
    CHECK(fit.intercept == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(slope_test(xs, ys, -2.5, 0.01).pass);
    CHECK_FALSE(slope_test(xs, ys, -2.0, 0.1).pass);
    CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("median and quantile") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK(quantile({0.0, 1.0, 2.0, 3.0, 4.0}, 0.5) == 2.0);
    CHECK(quantile({0.0, 1.0, 2.0, 3.0, 4.0}, 1.0) == 4.0);
    CHECK_THROWS_AS(median({}), std::invalid_argument);
}
