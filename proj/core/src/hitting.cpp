#include "combwalk/hitting.hpp"

#include <cmath>
#include <stdexcept>

#include "combwalk/accum.hpp"
#include "combwalk/quadrature.hpp"
#include "combwalk/special.hpp"

namespace combwalk {

namespace {

// First-passage path counts r * C(N, (N+r)/2) / N stay below 2^53 for
// N <= 40, so the small-N route yields exactly rounded dyadic rationals.
constexpr std::int64_t kExactCutoff = 40;

double hitting_pmf_exact(std::int64_t r, std::int64_t N) {
    const std::int64_t k = (N + r) / 2;
    unsigned __int128 binom = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        binom = binom * static_cast<unsigned __int128>(N - k + i) /
                static_cast<unsigned __int128>(i);
    }
    // (r/N) C(N,k) is the ballot count of first-passage paths: an integer.
    const unsigned __int128 paths =
        binom * static_cast<unsigned __int128>(r) /
        static_cast<unsigned __int128>(N);
    return std::ldexp(static_cast<double>(paths), static_cast<int>(-N));
}

double hitting_pmf_loggamma(std::int64_t r, std::int64_t N) {
    const double n = static_cast<double>(N);
    const double up = static_cast<double>((N + r) / 2);
    const double dn = static_cast<double>((N - r) / 2);
    const double logp = std::log(static_cast<double>(r)) - std::log(n) +
                        log_gamma(n + 1.0) - log_gamma(up + 1.0) -
                        log_gamma(dn + 1.0) - n * std::log(2.0);
    return std::exp(logp);
}

}  // namespace

double hitting_pmf(std::int64_t r, std::int64_t N) {
    if (r < 1) throw std::invalid_argument("hitting_pmf: requires r >= 1");
    if (N < r || ((N + r) & 1) != 0) return 0.0;
    if (N <= kExactCutoff) return hitting_pmf_exact(r, N);
    return hitting_pmf_loggamma(r, N);
}

double hitting_pmf_partial_sum(std::int64_t r, std::int64_t n_limit) {
    if (r < 1) throw std::invalid_argument("hitting_pmf_partial_sum: r >= 1");
    NeumaierSum sum;
    for (std::int64_t N = r; N < n_limit; N += 2) sum.add(hitting_pmf(r, N));
    return sum.value();
}

double hitting_limit_cdf(double u) {
    if (!(u > 0.0))
        throw std::invalid_argument("hitting_limit_cdf: requires u > 0");
    const double a = 1.0 / std::sqrt(u);
    // Integrand e^{-s^2/2} is below 1e-320 past s = 40; truncate there.
    const double b = a + 40.0;
    const double integral = adaptive_simpson(
        [](double s) { return std::exp(-0.5 * s * s); }, a, b,
        {.abs_tol = 1e-12, .max_depth = 48});
    return std::sqrt(2.0 / M_PI) * integral;
}

}  // namespace combwalk
