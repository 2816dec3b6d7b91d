// First-passage law of the simple walk on the line: exact pmf of the
// hitting time beta(r) of level r, and its r -> infinity scaling limit.

#ifndef COMBWALK_HITTING_HPP
#define COMBWALK_HITTING_HPP

#include <cstdint>

namespace combwalk {

struct HittingSpec {
    std::int64_t level;    // r >= 1
    std::int64_t horizon;  // largest N of interest
};

/// P(beta(r) = N) = (r/N) binom(N, (N+r)/2) 2^{-N}; 0 off-parity or for
/// N < r. Exact integer path counts are used for small N, a log-gamma
/// evaluation beyond.
double hitting_pmf(std::int64_t r, std::int64_t N);

/// Sum of the pmf over r <= N < n_limit (parity-respecting).
double hitting_pmf_partial_sum(std::int64_t r, std::int64_t n_limit);

/// lim_{r->inf} P(beta(r) < u r^2) = sqrt(2/pi) Int_{1/sqrt(u)}^inf
/// e^{-s^2/2} ds, evaluated by adaptive quadrature. Requires u > 0.
double hitting_limit_cdf(double u);

}  // namespace combwalk

#endif  // COMBWALK_HITTING_HPP
