#ifndef COMBWALK_QUADRATURE_HPP
#define COMBWALK_QUADRATURE_HPP

#include <functional>

namespace combwalk {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 48;
};

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, const QuadratureConfig& cfg = {});

}  // namespace combwalk

#endif  // COMBWALK_QUADRATURE_HPP
