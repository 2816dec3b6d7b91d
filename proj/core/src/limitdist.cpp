#include "combwalk/limitdist.hpp"

#include <cmath>
#include <stdexcept>

#include "combwalk/quadrature.hpp"
#include "combwalk/special.hpp"

namespace combwalk {

double dk_limit_cdf(double z, int K) {
    if (K < 2) throw std::invalid_argument("dk_limit_cdf: requires K >= 2");
    if (!(z >= 0.0)) throw std::invalid_argument("dk_limit_cdf: requires z >= 0");
    if (z == 0.0) return 0.0;
    const auto integrand = [z, K](double x) {
        const double band = normal_cdf(x) - normal_cdf(x - z);
        return std::pow(band, K - 1) * normal_pdf(x);
    };
    const double v =
        adaptive_simpson(integrand, -10.0, z + 10.0, {.abs_tol = 1e-10});
    return static_cast<double>(K) * v;
}

}  // namespace combwalk
