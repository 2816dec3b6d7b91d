#ifndef COMBWALK_ACCUM_HPP
#define COMBWALK_ACCUM_HPP

#include <cmath>

namespace combwalk {

/// Neumaier compensated summation; keeps O(eps) error independent of count.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace combwalk

#endif  // COMBWALK_ACCUM_HPP
