#include <doctest.h>

#include <cmath>
#include <vector>

#include "../common/oracles.hpp"
#include "combwalk/hitting.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/special.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walkers.hpp"

using namespace combwalk;

TEST_CASE("pmf values by hand") {
    CHECK(hitting_pmf(1, 1) == 0.5);
    CHECK(hitting_pmf(2, 4) == 0.125);
    CHECK(hitting_pmf(1, 3) == 0.125);
    CHECK(hitting_pmf(3, 9) == doctest::Approx(0.0546875).epsilon(1e-15));
    CHECK(hitting_pmf(2, 3) == 0.0);   // parity violation
    CHECK(hitting_pmf(5, 3) == 0.0);   // N < r
    CHECK_THROWS_AS(hitting_pmf(0, 4), std::invalid_argument);
}

TEST_CASE("pmf equals exhaustive first-passage enumeration, exactly") {
    for (int r = 1; r <= 4; ++r)
        for (int N = r; N <= 16; ++N) {
            const double expected =
                std::ldexp(static_cast<double>(
                               testoracle::first_passage_path_count(r, N)),
                           -N);
            CHECK(hitting_pmf(r, N) == expected);  // bit-exact dyadic values
        }
}

TEST_CASE("log-gamma route agrees with the integer route at the cutoff") {
    // N <= 40 uses exact integer path counts; the log route must agree to
    // rounding at the boundary.
    for (std::int64_t r : {1LL, 2LL, 5LL}) {
        for (std::int64_t N : {38LL, 40LL}) {
            if ((N + r) % 2 != 0) continue;
            const double exact = hitting_pmf(r, N);
            const double lg =
                std::exp(std::log(static_cast<double>(r)) -
                         std::log(static_cast<double>(N)) +
                         std::lgamma(static_cast<double>(N) + 1.0) -
                         std::lgamma(static_cast<double>((N + r) / 2) + 1.0) -
                         std::lgamma(static_cast<double>((N - r) / 2) + 1.0) -
                         static_cast<double>(N) * std::log(2.0));
            CHECK(exact == doctest::Approx(lg).epsilon(1e-12));
        }
    }
}

TEST_CASE("partial sums stay below one and increase") {
    const double s3 = hitting_pmf_partial_sum(1, 1'000);
    const double s4 = hitting_pmf_partial_sum(1, 10'000);
    const double s5 = hitting_pmf_partial_sum(1, 100'000);
    CHECK(s3 < s4);
    CHECK(s4 < s5);
    CHECK(s5 < 1.0);
    // beta(1) tail decays like n^{-1/2}: the sum approaches 1.
    CHECK(s5 > 0.99);
}

TEST_CASE("limit CDF values and identity") {
    CHECK(hitting_limit_cdf(1.0) == doctest::Approx(0.31731).epsilon(1e-4));
    // Quadrature equals the complementary-normal identity.
    for (double u : {0.25, 0.5, 1.0, 2.0, 8.0})
        CHECK(hitting_limit_cdf(u) ==
              doctest::Approx(2.0 * (1.0 - normal_cdf(1.0 / std::sqrt(u))))
                  .epsilon(1e-9));
    CHECK(hitting_limit_cdf(1e8) > 0.9999);
    CHECK_THROWS_AS(hitting_limit_cdf(0.0), std::invalid_argument);
    CHECK_THROWS_AS(hitting_limit_cdf(-1.0), std::invalid_argument);
}

TEST_CASE("r=200 partial sums approach the limit") {
    for (double u : {0.5, 1.0, 2.0}) {
        const auto cap = static_cast<std::int64_t>(u * 200.0 * 200.0);
        CHECK(std::abs(hitting_pmf_partial_sum(200, cap) -
                       hitting_limit_cdf(u)) < 0.01);
    }
}

TEST_CASE("Monte Carlo hitting times fit the pmf (r=5)") {
    const std::int64_t r = 5, horizon = 2048, samples = 100'000;
    std::vector<double> probs;
    std::vector<std::int64_t> counts;
    for (std::int64_t N = r; N <= horizon; N += 2)
        probs.push_back(hitting_pmf(r, N));
    double mass = 0.0;
    for (double p : probs) mass += p;
    probs.push_back(1.0 - mass);
    counts.assign(probs.size(), 0);
    RngStream rng(31, 4);
    for (std::int64_t s = 0; s < samples; ++s) {
        const auto hit = simulate_hitting_time(r, horizon, rng);
        if (hit < 0)
            ++counts.back();
        else
            ++counts[static_cast<std::size_t>((hit - r) / 2)];
    }
    CHECK(chi_square_gof(counts, probs, 0.001).pass);
}
