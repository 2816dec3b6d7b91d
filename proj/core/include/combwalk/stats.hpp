// Statistical test machinery behind the experiment verdicts: chi-square
// goodness of fit against exact pmfs, two-sample chi-square, KS distance
// against a continuous CDF, and least-squares slope fits.

#ifndef COMBWALK_STATS_HPP
#define COMBWALK_STATS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace combwalk {

enum class StatTestKind { chi_square, chi_square_two_sample, ks, slope_fit };

struct StatTest {
    StatTestKind kind;
    double statistic = 0.0;  // chi-square value, KS distance, or slope
    double threshold = 0.0;  // p-value floor, KS cap, or allowed deviation
    bool pass = false;       // pure function of statistic vs threshold
    double p_value = -1.0;   // set for the chi-square kinds
    std::int64_t df = 0;
};

/// Chi-square GOF of observed counts against expected probabilities.
/// Bins with expected count < pool_min are pooled into one remainder bin.
/// Passes when the p-value exceeds p_floor.
StatTest chi_square_gof(std::span<const std::int64_t> observed,
                        std::span<const double> expected_probs,
                        double p_floor, double pool_min = 5.0);

/// Two-sample chi-square on parallel histograms; pools rare bins.
StatTest chi_square_two_sample(std::span<const std::int64_t> counts_a,
                               std::span<const std::int64_t> counts_b,
                               double p_floor, double pool_min = 5.0);

/// Kolmogorov-Smirnov distance of a sample against a continuous CDF.
/// `sorted_samples` must be ascending. Passes when distance <= ks_cap.
StatTest ks_test(std::span<const double> sorted_samples,
                 const std::function<double(double)>& cdf, double ks_cap);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Slope fit packaged as a StatTest: passes when |slope - target| <= slack.
StatTest slope_test(std::span<const double> xs, std::span<const double> ys,
                    double target, double slack);

/// Median of a sample (copied and sorted); average of middle pair for even n.
double median(std::vector<double> values);

/// Quantile in [0,1] of a sample by linear interpolation on sorted values.
double quantile(std::vector<double> values, double q);

}  // namespace combwalk

#endif  // COMBWALK_STATS_HPP
