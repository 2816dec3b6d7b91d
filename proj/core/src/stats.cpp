#include "combwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "combwalk/accum.hpp"
#include "combwalk/special.hpp"

namespace combwalk {

namespace {

double chi_square_p_value(double statistic, std::int64_t df) {
    if (df <= 0) return 1.0;
    return gamma_q(0.5 * static_cast<double>(df), 0.5 * statistic);
}

}  // namespace

StatTest chi_square_gof(std::span<const std::int64_t> observed,
                        std::span<const double> expected_probs,
                        double p_floor, double pool_min) {
    if (observed.size() != expected_probs.size())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    if (observed.empty())
        throw std::invalid_argument("chi_square_gof: empty sample");
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
    if (total <= 0.0)
        throw std::invalid_argument("chi_square_gof: no observations");

    // Pool rare bins so the chi-square approximation is valid.
    double stat = 0.0;
    std::int64_t bins = 0;
    double pooled_exp = 0.0;
    std::int64_t pooled_obs = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = expected_probs[i] * total;
        if (e < pool_min) {
            pooled_exp += e;
            pooled_obs += observed[i];
            continue;
        }
        const double d = static_cast<double>(observed[i]) - e;
        stat += d * d / e;
        ++bins;
    }
    if (pooled_exp >= pool_min) {
        const double d = static_cast<double>(pooled_obs) - pooled_exp;
        stat += d * d / pooled_exp;
        ++bins;
    }
    if (bins < 2)
        throw std::invalid_argument("chi_square_gof: degenerate binning");

    StatTest t;
    t.kind = StatTestKind::chi_square;
    t.statistic = stat;
    t.df = bins - 1;
    t.p_value = chi_square_p_value(stat, t.df);
    t.threshold = p_floor;
    t.pass = t.p_value > p_floor;
    return t;
}

StatTest chi_square_two_sample(std::span<const std::int64_t> counts_a,
                               std::span<const std::int64_t> counts_b,
                               double p_floor, double pool_min) {
    if (counts_a.size() != counts_b.size())
        throw std::invalid_argument("chi_square_two_sample: size mismatch");
    const double na = static_cast<double>(
        std::accumulate(counts_a.begin(), counts_a.end(), std::int64_t{0}));
    const double nb = static_cast<double>(
        std::accumulate(counts_b.begin(), counts_b.end(), std::int64_t{0}));
    if (na <= 0.0 || nb <= 0.0)
        throw std::invalid_argument("chi_square_two_sample: empty samples");

    const double ka = std::sqrt(nb / na);
    const double kb = std::sqrt(na / nb);
    double stat = 0.0;
    std::int64_t bins = 0;
    std::int64_t pa = 0, pb = 0;
    auto add_bin = [&](double a, double b) {
        const double s = a + b;
        if (s <= 0.0) return;
        const double d = ka * a - kb * b;
        stat += d * d / s;
        ++bins;
    };
    for (std::size_t i = 0; i < counts_a.size(); ++i) {
        const auto a = counts_a[i];
        const auto b = counts_b[i];
        if (static_cast<double>(a + b) < 2.0 * pool_min) {
            pa += a;
            pb += b;
            continue;
        }
        add_bin(static_cast<double>(a), static_cast<double>(b));
    }
    if (static_cast<double>(pa + pb) >= 2.0 * pool_min)
        add_bin(static_cast<double>(pa), static_cast<double>(pb));
    if (bins < 2)
        throw std::invalid_argument("chi_square_two_sample: degenerate binning");

    StatTest t;
    t.kind = StatTestKind::chi_square_two_sample;
    t.statistic = stat;
    t.df = bins - 1;
    t.p_value = chi_square_p_value(stat, t.df);
    t.threshold = p_floor;
    t.pass = t.p_value > p_floor;
    return t;
}

StatTest ks_test(std::span<const double> sorted_samples,
                 const std::function<double(double)>& cdf, double ks_cap) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_test: empty sample");
    double d = 0.0;
    double last_x = std::numeric_limits<double>::quiet_NaN();
    double last_f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Lattice-valued samples repeat; reuse the CDF of duplicates.
        const double x = sorted_samples[i];
        const double f = (x == last_x) ? last_f : cdf(x);
        last_x = x;
        last_f = f;
        const double lo = f - static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
        d = std::max(d, std::max(lo, hi));
    }
    StatTest t;
    t.kind = StatTestKind::ks;
    t.statistic = d;
    t.threshold = ks_cap;
    t.pass = d <= ks_cap;
    return t;
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 paired points");
    const auto n = static_cast<double>(xs.size());
    NeumaierSum sx, sy;
    for (double x : xs) sx.add(x);
    for (double y : ys) sy.add(y);
    const double mx = sx.value() / n;
    const double my = sy.value() / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x values");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

StatTest slope_test(std::span<const double> xs, std::span<const double> ys,
                    double target, double slack) {
    const LineFit f = fit_line(xs, ys);
    StatTest t;
    t.kind = StatTestKind::slope_fit;
    t.statistic = f.slope;
    t.threshold = slack;
    t.pass = std::abs(f.slope - target) <= slack;
    return t;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile: empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q in [0,1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

}  // namespace combwalk
