#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "combwalk/quadrature.hpp"
#include "combwalk/special.hpp"

using namespace combwalk;

TEST_CASE("lanczos gamma hits reference values") {
    CHECK(gamma_fn(0.25) == doctest::Approx(3.6256099082219087).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(log_gamma(101.0) == doctest::Approx(std::lgamma(101.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);
}

TEST_CASE("incomplete gamma and chi-square p-values") {
    // df = 2: Q(1, x/2) = exp(-x/2) exactly.
    for (double x : {0.5, 1.7, 6.0})
        CHECK(gamma_q(1.0, x / 2) == doctest::Approx(std::exp(-x / 2)).epsilon(1e-13));
    // df = 1, statistic 4: p = erfc(sqrt(2)).
    CHECK(gamma_q(0.5, 2.0) ==
          doctest::Approx(0.045500263896358396).epsilon(1e-12));
    CHECK(gamma_p(3.0, 0.0) == 0.0);
    CHECK(gamma_q(3.0, 0.0) == 1.0);
    CHECK(gamma_p(2.5, 200.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double a : {0.5, 1.0, 4.2})
        for (double x : {0.1, 1.0, 7.0})
            CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normal cdf and density") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
    CHECK(normal_cdf(-1.0) ==
          doctest::Approx(1.0 - 0.8413447460685429).epsilon(1e-14));
    CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
}

TEST_CASE("adaptive simpson on reference integrals") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(adaptive_simpson([](double x) { return normal_pdf(x); }, -10.0, 10.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(
        adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, {.abs_tol = 0.0}),
        std::invalid_argument);
}
