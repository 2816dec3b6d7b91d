// Desk-scale Monte Carlo experiments: LIL running-max profiles, the
// lower-class series criterion, collision growth, backbone coincidences,
// the limiting distance CDF, and tail-bound checks. Each experiment
// returns an ExperimentReport with per-checkpoint rows and verdict rows;
// reports are bit-reproducible from (config, seed) and independent of the
// thread count (replicates are reduced in index order).

#ifndef COMBWALK_EXPERIMENTS_HPP
#define COMBWALK_EXPERIMENTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace combwalk {

enum class Verdict { info, pass, fail };

struct ReportRow {
    std::string statistic;
    std::int64_t checkpoint_n = 0;
    std::int64_t replicate_count = 0;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::info;
};

struct ExperimentReport {
    std::string experiment;
    std::uint64_t master_seed = 0;
    std::string config_hash;  // filled by the harness
    double wall_time_s = 0.0;
    std::vector<ReportRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (r.verdict == Verdict::fail) return false;
        return true;
    }
    void add_info(std::string name, std::int64_t n, std::int64_t reps,
                  double value) {
        rows.push_back({std::move(name), n, reps, value, 0.0, 0.0, Verdict::info});
    }
    void add_verdict(std::string name, std::int64_t n, std::int64_t reps,
                     double value, double target, double tolerance, bool pass) {
        rows.push_back({std::move(name), n, reps, value, target, tolerance,
                        pass ? Verdict::pass : Verdict::fail});
    }
};

/// Dyadic checkpoint grid {16, 32, ...} up to and including n_max.
std::vector<std::int64_t> dyadic_checkpoints(std::int64_t n_max,
                                             std::int64_t n_min = 16);

// ---------------------------------------------------------------------
// LIL running-max profiles.

enum class LilGraph { zd, comb };
enum class LilStatistic { d_k, abs_c1, abs_c2, norm_s };

struct LilConfig {
    LilGraph graph = LilGraph::zd;
    LilStatistic statistic = LilStatistic::d_k;
    int d = 1;  // Z^d dimension (zd graph only)
    int K = 2;  // walkers (d_k statistic only)
    std::int64_t n_max = 1'000'000;
    std::int64_t replicates = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    // First step entering the running max; 0 selects max(16, n_max/64).
    // Early scales (log log m near 1) would otherwise dominate the sup at
    // every feasible horizon and never wash out.
    std::int64_t run_max_min = 0;
    // Acceptance band for the ensemble median of the per-path running
    // max at the final checkpoint, as multiples of the a.s. constant.
    // Zero selects the per-statistic documented defaults.
    double band_lo_factor = 0.0;
    double band_hi_factor = 0.0;
};

struct LilProfile {
    std::vector<std::int64_t> checkpoints;
    std::vector<double> ensemble_median;  // of per-path running max
    std::vector<double> ensemble_max;
    double target_constant = 0.0;
    std::vector<double> final_running_max;  // per replicate, at n_max
};

/// Normalizer matching the statistic (for m >= 16): sqrt(m log log m)
/// for distances, sqrt(2 m log log m) for |C2|, 2 sqrt(m log log m) for
/// the comb distance, m^{1/4} (log log m)^{3/4} for |C1|.
double lil_normalizer(LilGraph graph, LilStatistic stat, std::int64_t m);

/// A.s. limsup constant for the configured statistic.
double lil_target_constant(const LilConfig& cfg);

/// Band factors (lo, hi) in effect for a config: explicit values if set,
/// else the documented per-statistic defaults.
std::pair<double, double> lil_band_factors(const LilConfig& cfg);

LilProfile lil_profile(const LilConfig& cfg);
ExperimentReport lil_profile_report(const LilConfig& cfg);

// ---------------------------------------------------------------------
// Series criterion (lower-lower-class membership test).

enum class SeriesFamily { power, logpower };
enum class SeriesClass { convergent, divergent, inconclusive };

struct SeriesCriterion {
    SeriesFamily family = SeriesFamily::power;
    double param = 0.5;  // alpha for t^-alpha, beta for (log2 t)^-beta
    int exponent_p = 1;  // Kd - d - 2, K - 2, or d - 2
};

/// Thrown for nonpositive criterion exponent (e.g. K = 2, d = 1).
class CriterionDegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Classifies sum_n a(2^n)^p by closed-form reduction (power family ->
/// geometric series, logpower -> p-series). The function a is validated
/// numerically as nonincreasing and nonnegative on a dyadic grid.
SeriesClass series_classify(const SeriesCriterion& criterion);

std::string to_string(SeriesClass c);

// ---------------------------------------------------------------------
// Collision growth.

struct CollisionGrowthConfig {
    LilGraph graph = LilGraph::zd;
    int d = 1;
    int K = 2;
    std::int64_t n_max = 1'000'000;
    std::int64_t replicates = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::int64_t late_window_start = 10'000;  // comb finiteness window
    double mean_oracle_tolerance = 0.05;      // Z K=2 mean vs convolution
    std::int64_t mean_oracle_n = 10'000;
};

/// Exact expected pairwise-collision count of two independent line walks
/// up to n: sum_{j<=n} C(2j,j) 4^-j.
double expected_pair_collisions_zd(std::int64_t n);

ExperimentReport collision_growth_experiment(const CollisionGrowthConfig& cfg);

// ---------------------------------------------------------------------
// Backbone coincidences of two comb walkers.

struct BackboneCoincidenceConfig {
    std::int64_t n_max = 1'000'000;
    std::int64_t replicates = 200;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double factor_band = 2.0;  // mean within this factor of (2/pi) ln n
};

ExperimentReport backbone_coincidence_experiment(
    const BackboneCoincidenceConfig& cfg);

// ---------------------------------------------------------------------
// Limiting CDF of D_K / sqrt(n) on the line.

struct DistanceCdfConfig {
    int K = 2;
    std::int64_t n = 10'000;
    std::int64_t replicates = 100'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double ks_cap = 0.02;
};

ExperimentReport distance_cdf_experiment(const DistanceCdfConfig& cfg);

// ---------------------------------------------------------------------
// Lower-class behavior of two comb walkers.

struct LowerClassConfig {
    std::int64_t n_max = 1'000'000;
    std::int64_t replicates = 10'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double epsilon = 0.05;          // in (0, 1/8)
    std::int64_t slope_fit_min = 32;    // first dyadic n in the decay fit
    double slope_slack = 0.15;          // allowed excess over -(1/2+3eps)
    double ever_event_min_fraction = 0.5;   // i.o.-event proxy
    double final_event_min_fraction = 0.99; // D_2 > n^{1/4-eps} at n_max
};

ExperimentReport lower_class_experiment(const LowerClassConfig& cfg);

// ---------------------------------------------------------------------
// Tail-bound checks (geometric sums and driver local time).

struct TailBoundConfig {
    std::int64_t geometric_n = 100;       // size for the max-partial-sum and sum-tail checks
    std::int64_t geometric_bound_n = 400; // size where the 1/n^2 bound holds
    double delta = 0.5;
    std::int64_t geometric_samples = 1'000'000;
    std::int64_t local_time_n = 10'000;   // must be even
    std::int64_t local_time_samples = 200'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double slope_slack = 0.2;
};

/// Exact P(sum_{i<=n} G_i >= s0) for i.i.d. geometric(1/2) on {0,1,...}.
double exact_geometric_sum_tail(std::int64_t n, std::int64_t s0);

/// Exact P(xi(0,n) >= k_min) for the line walk, n even.
double exact_local_time_tail(std::int64_t n, std::int64_t k_min);

ExperimentReport tail_bound_checks(const TailBoundConfig& cfg);

}  // namespace combwalk

#endif  // COMBWALK_EXPERIMENTS_HPP
