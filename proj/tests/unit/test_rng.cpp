#include <doctest.h>

#include <cmath>
#include <vector>

#include "combwalk/rng.hpp"
#include "combwalk/stats.hpp"

using namespace combwalk;

TEST_CASE("stream output is a pure function of the triple") {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c(42, 8), d(43, 7);
    a = RngStream(42, 7);
    bool differs_stream = false, differs_seed = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        if (va != c.next_u64()) differs_stream = true;
        if (va != d.next_u64()) differs_seed = true;
    }
    CHECK(differs_stream);
    CHECK(differs_seed);

    RngStream resumed(42, 7, 500);
    RngStream replay(42, 7);
    for (int i = 0; i < 500; ++i) replay.next_u64();
    CHECK(resumed.next_u64() == replay.next_u64());
}

TEST_CASE("next_below is in range and roughly uniform") {
    RngStream rng(1, 1);
    std::vector<std::int64_t> counts(6, 0);
    for (int i = 0; i < 600'000; ++i) {
        const auto v = rng.next_below(6);
        REQUIRE(v < 6);
        ++counts[static_cast<std::size_t>(v)];
    }
    const std::vector<double> probs(6, 1.0 / 6.0);
    CHECK(chi_square_gof(counts, probs, 0.001).pass);
}

TEST_CASE("distinct stream ids pass a uniformity chi-square") {
    for (std::uint64_t sid : {3ULL, 0x9999ULL}) {
        RngStream rng(2024, sid);
        const int bins = 256;
        std::vector<std::int64_t> counts(bins, 0);
        for (int i = 0; i < 400'000; ++i)
            ++counts[static_cast<std::size_t>(rng.next_unit() * bins)];
        const std::vector<double> probs(bins, 1.0 / bins);
        const auto t = chi_square_gof(counts, probs, 0.001);
        CHECK(t.pass);
    }
}

TEST_CASE("geometric sampler matches P(k) = 2^-k-1") {
    RngStream rng(11, 5);
    const std::int64_t n = 2'000'000;
    std::vector<std::int64_t> counts(64, 0);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const auto g = sample_geometric(rng);
        REQUIRE(g >= 0);
        REQUIRE(g <= 63);
        ++counts[static_cast<std::size_t>(g)];
        sum += g;
    }
    // P(G=0) = 1/2 and P(G=2) = 1/8 within 4 sigma.
    const double f0 = static_cast<double>(counts[0]) / static_cast<double>(n);
    const double f2 = static_cast<double>(counts[2]) / static_cast<double>(n);
    CHECK(std::abs(f0 - 0.5) < 4.0 * std::sqrt(0.25 / static_cast<double>(n)));
    CHECK(std::abs(f2 - 0.125) <
          4.0 * std::sqrt(0.125 * 0.875 / static_cast<double>(n)));
    // Mean 1 (sum k 2^-k-1 = 1), variance 2: 4 sigma band on the mean.
    const double mean = static_cast<double>(sum) / static_cast<double>(n);
    CHECK(std::abs(mean - 1.0) < 4.0 * std::sqrt(2.0 / static_cast<double>(n)));

    std::vector<double> probs(64);
    for (int k = 0; k < 64; ++k) probs[static_cast<std::size_t>(k)] = std::ldexp(1.0, -k - 1);
    CHECK(chi_square_gof(counts, probs, 0.001).pass);
}

TEST_CASE("normal draws have the right first two moments") {
    RngStream rng(3, 3);
    const int n = 200'000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = rng.next_normal();
        s += v;
        s2 += v * v;
    }
    CHECK(std::abs(s / n) < 0.01);
    CHECK(std::abs(s2 / n - 1.0) < 0.02);
}
