#include "combwalk/greenfn.hpp"

#include <cmath>
#include <stdexcept>

#include "combwalk/special.hpp"

namespace combwalk {

GenFnPoint generating_functions(double z) {
    if (!(z >= 0.0) || z >= 1.0)
        throw std::invalid_argument("generating_functions: requires 0 <= z < 1");
    GenFnPoint p;
    p.z = z;
    if (z == 0.0) {
        p.g = 1.0;
        p.f1 = 0.0;
        p.f2 = 0.0;
        p.h = 1.0;
        return p;
    }
    const double u = std::sqrt(1.0 - z * z);  // sqrt(1-z^2)
    // G(z) = sqrt(2) / sqrt(u + u^2)
    p.g = std::sqrt(2.0) / std::sqrt(u * (1.0 + u));
    // F1(z) = (1 + u - sqrt(2) sqrt(u + u^2)) / z, rewritten without the
    // small-z cancellation as z / (sqrt(1+u) (sqrt(1+u) + sqrt(2u))).
    const double s1u = std::sqrt(1.0 + u);
    p.f1 = z / (s1u * (s1u + std::sqrt(2.0 * u)));
    // F2(z) = (1 - u) / z = z / (1 + u).
    p.f2 = z / (1.0 + u);
    p.h = p.g * (1.0 + p.f1) / (1.0 - p.f1);
    return p;
}

double green_function_eval(std::int64_t k, std::int64_t l, double z) {
    const GenFnPoint p = generating_functions(z);
    const double horiz = std::pow(p.f1, static_cast<double>(k < 0 ? -k : k));
    if (l == 0) return p.g * horiz;
    const double vert = std::pow(p.f2, static_cast<double>(l < 0 ? -l : l));
    return 0.5 * p.g * horiz * vert;
}

double backbone_generating_fn(double z) { return generating_functions(z).h; }

double phi_rate(double kappa) {
    if (!(kappa >= 0.0) || kappa >= 1.0)
        throw std::invalid_argument("phi_rate: requires 0 <= kappa < 1");
    if (kappa == 0.0) return 0.0;
    return (kappa - 1.0) * std::log1p(-kappa) - (kappa + 1.0) * std::log1p(kappa);
}

double tooth_profile_prediction(std::int64_t n, std::int64_t k) {
    if (n <= 0) throw std::invalid_argument("tooth_profile_prediction: n > 0");
    const double kappa = static_cast<double>(k) / static_cast<double>(n);
    if (!(kappa >= 0.0) || kappa >= 1.0)
        throw std::invalid_argument(
            "tooth_profile_prediction: requires 0 <= k/n < 1");
    const double nd = static_cast<double>(n);
    return std::sqrt(2.0) * std::exp(nd * phi_rate(kappa)) /
           (gamma_fn(0.25) * std::pow(nd, 0.75));
}

}  // namespace combwalk
