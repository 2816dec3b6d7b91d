// Limiting distribution of the normalized maximal distance D_K / sqrt(n)
// for K independent line walks: conditioning on the largest of K standard
// normals gives
//   F_K(z) = K Int (Phi(x) - Phi(x-z))^{K-1} phi(x) dx.

#ifndef COMBWALK_LIMITDIST_HPP
#define COMBWALK_LIMITDIST_HPP

namespace combwalk {

/// F_K(z) by adaptive quadrature over [-10, z+10] (normal mass outside is
/// below 1e-23); absolute error <= 1e-8. Requires z >= 0, K >= 2.
double dk_limit_cdf(double z, int K);

}  // namespace combwalk

#endif  // COMBWALK_LIMITDIST_HPP
