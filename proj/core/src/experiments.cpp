#include "combwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "combwalk/accum.hpp"
#include "combwalk/lattice.hpp"
#include "combwalk/limitdist.hpp"
#include "combwalk/metrics.hpp"
#include "combwalk/parallel.hpp"
#include "combwalk/rng.hpp"
#include "combwalk/special.hpp"
#include "combwalk/stats.hpp"
#include "combwalk/walkers.hpp"

namespace combwalk {

namespace {

// Stream salts: one per experiment family. Walker i of replicate r draws
// from stream hash(salt, i, r), so ensembles that differ only in K share
// the paths of their common walkers.
constexpr std::uint64_t kSaltLil = 0x6c696c70726f6600ULL;
constexpr std::uint64_t kSaltCollision = 0x636f6c6c69646500ULL;
constexpr std::uint64_t kSaltBackbone = 0x6261636b626f6e00ULL;
constexpr std::uint64_t kSaltDistance = 0x6469737463646600ULL;
constexpr std::uint64_t kSaltLower = 0x6c6f776572636c00ULL;
constexpr std::uint64_t kSaltTail = 0x7461696c626e6400ULL;

double log_log(std::int64_t m) { return std::log(std::log(static_cast<double>(m))); }

std::int64_t iabs64(std::int64_t v) { return v < 0 ? -v : v; }

double median_of_i64(std::vector<std::int64_t> v) {
    std::vector<double> d(v.begin(), v.end());
    return median(std::move(d));
}

}  // namespace

std::vector<std::int64_t> dyadic_checkpoints(std::int64_t n_max,
                                             std::int64_t n_min) {
    if (n_max < n_min)
        throw std::invalid_argument("dyadic_checkpoints: n_max < n_min");
    std::vector<std::int64_t> cps;
    for (std::int64_t t = 1; t <= n_max && t > 0; t *= 2)
        if (t >= n_min) cps.push_back(t);
    if (cps.empty() || cps.back() != n_max) cps.push_back(n_max);
    return cps;
}

// ---------------------------------------------------------------------
// LIL running-max profiles.

double lil_normalizer(LilGraph graph, LilStatistic stat, std::int64_t m) {
    const double md = static_cast<double>(m);
    const double ll = log_log(m);
    switch (stat) {
        case LilStatistic::d_k:
            return graph == LilGraph::comb ? 2.0 * std::sqrt(md * ll)
                                           : std::sqrt(md * ll);
        case LilStatistic::norm_s:
            return std::sqrt(md * ll);
        case LilStatistic::abs_c2:
            return std::sqrt(2.0 * md * ll);
        case LilStatistic::abs_c1:
            return std::pow(md, 0.25) * std::pow(ll, 0.75);
    }
    throw std::logic_error("lil_normalizer: unreachable");
}

double lil_target_constant(const LilConfig& cfg) {
    switch (cfg.statistic) {
        case LilStatistic::d_k:
            return cfg.graph == LilGraph::comb
                       ? 1.0
                       : 2.0 / std::sqrt(static_cast<double>(cfg.d));
        case LilStatistic::norm_s:
            return std::sqrt(2.0 / static_cast<double>(cfg.d));
        case LilStatistic::abs_c2:
            return 1.0;
        case LilStatistic::abs_c1:
            return std::pow(2.0, 1.25) / std::pow(3.0, 0.75);
    }
    throw std::logic_error("lil_target_constant: unreachable");
}

namespace {

void validate_lil(const LilConfig& cfg) {
    if (cfg.n_max < 1000)
        throw std::invalid_argument("lil_profile: n_max must be >= 1000");
    if (cfg.replicates < 1)
        throw std::invalid_argument("lil_profile: replicates >= 1");
    if (cfg.statistic == LilStatistic::d_k && cfg.K < 2)
        throw std::invalid_argument("lil_profile: distance statistic needs K >= 2");
    if (cfg.graph == LilGraph::zd) {
        if (cfg.d < 1) throw std::invalid_argument("lil_profile: d >= 1");
        if (cfg.statistic == LilStatistic::abs_c1 ||
            cfg.statistic == LilStatistic::abs_c2)
            throw std::invalid_argument(
                "lil_profile: comb coordinate statistics need the comb graph");
    } else if (cfg.statistic == LilStatistic::norm_s) {
        throw std::invalid_argument("lil_profile: ||S|| lives on Z^d");
    }
}

std::int64_t lil_run_max_min(const LilConfig& cfg) {
    if (cfg.run_max_min > 0) return std::max<std::int64_t>(16, cfg.run_max_min);
    return std::max<std::int64_t>(16, cfg.n_max / 64);
}

// Advances path state one step and returns the statistic value.
template <class Path>
void lil_run_replicate(const LilConfig& cfg, std::int64_t m_min, Path& path,
                       const std::vector<std::int64_t>& cps,
                       std::vector<double>& out_row) {
    double run_max = 0.0;
    double norm_floor = 0.0;  // normalizer at the last evaluation
    std::size_t next_cp = 0;
    for (std::int64_t m = 1; m <= cfg.n_max; ++m) {
        const double stat = path.advance();
        if (m >= m_min && stat > run_max * norm_floor) {
            const double norm = lil_normalizer(cfg.graph, cfg.statistic, m);
            norm_floor = norm;  // normalizers are nondecreasing in m
            const double ratio = stat / norm;
            if (ratio > run_max) run_max = ratio;
        }
        if (next_cp < cps.size() && m == cps[next_cp]) {
            out_row[next_cp] = run_max;
            ++next_cp;
        }
    }
}

struct ZdDkPath {
    std::vector<ZdWalker> walkers;
    double advance() {
        for (auto& w : walkers) w.step();
        double best = 0.0;
        for (std::size_t i = 0; i < walkers.size(); ++i)
            for (std::size_t j = i + 1; j < walkers.size(); ++j) {
                const double d = euclidean_distance(walkers[i].position(),
                                                    walkers[j].position());
                if (d > best) best = d;
            }
        return best;
    }
};

struct ZdNormPath {
    ZdWalker walker;
    ZdPoint origin;
    double advance() {
        walker.step();
        return euclidean_distance(walker.position(), origin);
    }
};

struct CombDkPath {
    std::vector<CombWalkerDirect> walkers;
    double advance() {
        for (auto& w : walkers) w.step();
        std::int64_t best = 0;
        for (std::size_t i = 0; i < walkers.size(); ++i)
            for (std::size_t j = i + 1; j < walkers.size(); ++j) {
                const std::int64_t d = comb_graph_distance(
                    walkers[i].position(), walkers[j].position());
                if (d > best) best = d;
            }
        return static_cast<double>(best);
    }
};

struct CombCoordPath {
    CombWalkerDirect walker;
    bool horizontal;  // |C1| vs |C2|
    double advance() {
        walker.step();
        const auto p = walker.position();
        return static_cast<double>(iabs64(horizontal ? p.x : p.y));
    }
};

}  // namespace

LilProfile lil_profile(const LilConfig& cfg) {
    validate_lil(cfg);
    const std::int64_t m_min = lil_run_max_min(cfg);
    const auto cps = dyadic_checkpoints(cfg.n_max, m_min);
    std::vector<std::vector<double>> rows(
        static_cast<std::size_t>(cfg.replicates),
        std::vector<double>(cps.size(), 0.0));

    parallel_for(0, cfg.replicates, cfg.threads, [&](std::int64_t rep) {
        auto stream = [&](std::uint64_t walker) {
            return RngStream(cfg.seed,
                             derive_stream_id(kSaltLil, walker,
                                              static_cast<std::uint64_t>(rep)));
        };
        auto& row = rows[static_cast<std::size_t>(rep)];
        if (cfg.graph == LilGraph::zd && cfg.statistic == LilStatistic::d_k) {
            ZdDkPath path;
            for (int i = 0; i < cfg.K; ++i)
                path.walkers.emplace_back(static_cast<std::size_t>(cfg.d),
                                          stream(static_cast<std::uint64_t>(i)));
            lil_run_replicate(cfg, m_min, path, cps, row);
        } else if (cfg.graph == LilGraph::zd) {
            ZdNormPath path{ZdWalker(static_cast<std::size_t>(cfg.d), stream(0)),
                            ZdPoint(static_cast<std::size_t>(cfg.d))};
            lil_run_replicate(cfg, m_min, path, cps, row);
        } else if (cfg.statistic == LilStatistic::d_k) {
            CombDkPath path;
            for (int i = 0; i < cfg.K; ++i)
                path.walkers.emplace_back(
                    CombWalkerDirect(stream(static_cast<std::uint64_t>(i))));
            lil_run_replicate(cfg, m_min, path, cps, row);
        } else {
            CombCoordPath path{CombWalkerDirect(stream(0)),
                               cfg.statistic == LilStatistic::abs_c1};
            lil_run_replicate(cfg, m_min, path, cps, row);
        }
    });

    LilProfile prof;
    prof.checkpoints = cps;
    prof.target_constant = lil_target_constant(cfg);
    prof.ensemble_median.resize(cps.size());
    prof.ensemble_max.resize(cps.size());
    for (std::size_t c = 0; c < cps.size(); ++c) {
        std::vector<double> vals;
        vals.reserve(rows.size());
        for (const auto& r : rows) vals.push_back(r[c]);
        prof.ensemble_max[c] = *std::max_element(vals.begin(), vals.end());
        prof.ensemble_median[c] = median(std::move(vals));
    }
    for (const auto& r : rows) prof.final_running_max.push_back(r.back());
    return prof;
}

std::pair<double, double> lil_band_factors(const LilConfig& cfg) {
    if (cfg.band_lo_factor > 0.0 && cfg.band_hi_factor > 0.0)
        return {cfg.band_lo_factor, cfg.band_hi_factor};
    switch (cfg.statistic) {
        case LilStatistic::d_k:
            return cfg.graph == LilGraph::comb ? std::pair{0.70, 1.10}
                                               : std::pair{0.65, 1.10};
        case LilStatistic::norm_s:
            return {0.65, 1.10};
        case LilStatistic::abs_c2:
            return {0.70, 1.10};
        case LilStatistic::abs_c1:
            return {0.50, 1.30};
    }
    throw std::logic_error("lil_band_factors: unreachable");
}

namespace {

const char* lil_stat_name(const LilConfig& cfg) {
    switch (cfg.statistic) {
        case LilStatistic::d_k:
            return cfg.graph == LilGraph::comb ? "comb_dk" : "zd_dk";
        case LilStatistic::norm_s: return "zd_norm";
        case LilStatistic::abs_c2: return "comb_abs_c2";
        case LilStatistic::abs_c1: return "comb_abs_c1";
    }
    return "unknown";
}

}  // namespace

ExperimentReport lil_profile_report(const LilConfig& cfg) {
    const LilProfile prof = lil_profile(cfg);
    const auto [lo_f, hi_f] = lil_band_factors(cfg);
    const double target = prof.target_constant;
    const double lo = lo_f * target;
    const double hi = hi_f * target;
    const std::string stat = lil_stat_name(cfg);

    ExperimentReport rep;
    rep.experiment = "lil_profile";
    rep.master_seed = cfg.seed;
    for (std::size_t c = 0; c < prof.checkpoints.size(); ++c) {
        rep.add_info(stat + "_running_max_median", prof.checkpoints[c],
                     cfg.replicates, prof.ensemble_median[c]);
        rep.add_info(stat + "_running_max_max", prof.checkpoints[c],
                     cfg.replicates, prof.ensemble_max[c]);
    }
    const double final_median = prof.ensemble_median.back();
    rep.add_verdict(stat + "_median_band_lower", cfg.n_max, cfg.replicates,
                    final_median, lo, 0.0, final_median >= lo);
    rep.add_verdict(stat + "_median_band_upper", cfg.n_max, cfg.replicates,
                    final_median, hi, 0.0, final_median <= hi);
    // Running maxima are nondecreasing pathwise, so the profile medians
    // must be nondecreasing across checkpoints.
    bool monotone = true;
    for (std::size_t c = 1; c < prof.ensemble_median.size(); ++c)
        if (prof.ensemble_median[c] < prof.ensemble_median[c - 1]) monotone = false;
    rep.add_verdict(stat + "_running_max_monotone", cfg.n_max, cfg.replicates,
                    monotone ? 1.0 : 0.0, 1.0, 0.0, monotone);
    return rep;
}

// ---------------------------------------------------------------------
// Series criterion.

SeriesClass series_classify(const SeriesCriterion& criterion) {
    // Validate a(t): nonincreasing and nonnegative on a dyadic grid.
    auto a = [&](double t) {
        return criterion.family == SeriesFamily::power
                   ? std::pow(t, -criterion.param)
                   : std::pow(std::log2(t), -criterion.param);
    };
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 40; ++j) {
        const double v = a(std::pow(2.0, j));
        if (!(v >= 0.0) || v > prev * (1.0 + 1e-12))
            throw std::invalid_argument(
                "series_classify: a(t) must be nonincreasing and nonnegative");
        prev = v;
    }
    if (criterion.exponent_p <= 0)
        throw CriterionDegenerateError(
            "series_classify: criterion degenerate, exponent p = " +
            std::to_string(criterion.exponent_p) +
            " is nonpositive; the series test carries no information");

    const double p = static_cast<double>(criterion.exponent_p);
    if (criterion.family == SeriesFamily::power) {
        // a(2^n)^p = 2^{-alpha p n}: geometric, converges iff alpha p > 0.
        return criterion.param * p > 0.0 ? SeriesClass::convergent
                                         : SeriesClass::divergent;
    }
    // a(2^n)^p = n^{-beta p}: p-series, converges iff beta p > 1.
    return criterion.param * p > 1.0 ? SeriesClass::convergent
                                     : SeriesClass::divergent;
}

std::string to_string(SeriesClass c) {
    switch (c) {
        case SeriesClass::convergent: return "convergent";
        case SeriesClass::divergent: return "divergent";
        case SeriesClass::inconclusive: return "inconclusive";
    }
    return "unknown";
}

// ---------------------------------------------------------------------
// Collision growth.

double expected_pair_collisions_zd(std::int64_t n) {
    // sum_{j<=n} C(2j,j) 4^-j via the ratio recurrence.
    NeumaierSum sum;
    double c = 1.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        c *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
        sum.add(c);
    }
    return sum.value();
}

ExperimentReport collision_growth_experiment(const CollisionGrowthConfig& cfg) {
    if (cfg.K < 2)
        throw std::invalid_argument("collision_growth: K >= 2 required");
    if (cfg.graph == LilGraph::zd && cfg.d < 1)
        throw std::invalid_argument("collision_growth: d >= 1 required");
    const auto cps = dyadic_checkpoints(cfg.n_max);
    const auto reps = static_cast<std::size_t>(cfg.replicates);
    std::vector<std::vector<std::int64_t>> full_counts(
        reps, std::vector<std::int64_t>(cps.size(), 0));
    std::vector<std::vector<std::int64_t>> pair_counts(
        reps, std::vector<std::int64_t>(cps.size(), 0));
    std::vector<std::int64_t> late_pair_counts(reps, 0);

    parallel_for(0, cfg.replicates, cfg.threads, [&](std::int64_t rep) {
        std::int64_t full_so_far = 0, pair_so_far = 0, late = 0;
        std::size_t next_cp = 0;
        auto& full_row = full_counts[static_cast<std::size_t>(rep)];
        auto& pair_row = pair_counts[static_cast<std::size_t>(rep)];
        auto stream = [&](std::uint64_t walker) {
            return RngStream(cfg.seed,
                             derive_stream_id(kSaltCollision, walker,
                                              static_cast<std::uint64_t>(rep)));
        };
        auto scan = [&](auto positions_equal, auto step_all) {
            for (std::int64_t m = 1; m <= cfg.n_max; ++m) {
                step_all();
                int equal_pairs = 0;
                for (int i = 0; i < cfg.K; ++i)
                    for (int j = i + 1; j < cfg.K; ++j)
                        if (positions_equal(i, j)) ++equal_pairs;
                const bool all_equal = equal_pairs == cfg.K * (cfg.K - 1) / 2;
                pair_so_far += equal_pairs;
                if (equal_pairs > 0 && m > cfg.late_window_start)
                    late += equal_pairs;
                if (all_equal) ++full_so_far;
                if (next_cp < cps.size() && m == cps[next_cp]) {
                    full_row[next_cp] = full_so_far;
                    pair_row[next_cp] = pair_so_far;
                    ++next_cp;
                }
            }
        };
        if (cfg.graph == LilGraph::zd) {
            std::vector<ZdWalker> walkers;
            for (int i = 0; i < cfg.K; ++i)
                walkers.emplace_back(static_cast<std::size_t>(cfg.d),
                                     stream(static_cast<std::uint64_t>(i)));
            scan(
                [&](int i, int j) {
                    return walkers[static_cast<std::size_t>(i)].position() ==
                           walkers[static_cast<std::size_t>(j)].position();
                },
                [&]() {
                    for (auto& w : walkers) w.step();
                });
        } else {
            std::vector<CombWalkerDirect> walkers;
            for (int i = 0; i < cfg.K; ++i)
                walkers.emplace_back(stream(static_cast<std::uint64_t>(i)));
            scan(
                [&](int i, int j) {
                    return walkers[static_cast<std::size_t>(i)].position() ==
                           walkers[static_cast<std::size_t>(j)].position();
                },
                [&]() {
                    for (auto& w : walkers) w.step();
                });
        }
        late_pair_counts[static_cast<std::size_t>(rep)] = late;
    });

    ExperimentReport rep;
    rep.experiment = "collision_growth";
    rep.master_seed = cfg.seed;

    std::vector<double> full_medians(cps.size()), pair_means(cps.size());
    for (std::size_t c = 0; c < cps.size(); ++c) {
        std::vector<std::int64_t> fulls(reps), pairs(reps);
        std::int64_t pair_total = 0;
        for (std::size_t r = 0; r < reps; ++r) {
            fulls[r] = full_counts[r][c];
            pairs[r] = pair_counts[r][c];
            pair_total += pairs[r];
        }
        full_medians[c] = median_of_i64(fulls);
        pair_means[c] =
            static_cast<double>(pair_total) / static_cast<double>(reps);
        rep.add_info("full_collisions_median", cps[c], cfg.replicates,
                     full_medians[c]);
        rep.add_info("pairwise_collisions_median", cps[c], cfg.replicates,
                     median_of_i64(pairs));
        rep.add_info("pairwise_collisions_mean", cps[c], cfg.replicates,
                     pair_means[c]);
    }

    if (cfg.graph == LilGraph::zd && cfg.K >= 3) {
        // Full-collision medians must keep growing (recurrence of triple
        // collisions on the line): nondecreasing across checkpoints with a
        // strict increase from the first checkpoint >= late_window_start.
        std::size_t first = 0;
        while (first + 1 < cps.size() && cps[first] < cfg.late_window_start)
            ++first;
        bool monotone = true;
        for (std::size_t c = 1; c < cps.size(); ++c)
            if (full_medians[c] < full_medians[c - 1]) monotone = false;
        const bool strict = full_medians.back() > full_medians[first];
        rep.add_verdict("full_median_monotone", cfg.n_max, cfg.replicates,
                        monotone ? 1.0 : 0.0, 1.0, 0.0, monotone);
        rep.add_verdict("full_median_growth", cfg.n_max, cfg.replicates,
                        full_medians.back(), full_medians[first], 0.0, strict);
    }
    if (cfg.graph == LilGraph::comb && cfg.K == 2) {
        const double late_median = median_of_i64(late_pair_counts);
        rep.add_verdict("late_pairwise_median_zero", cfg.n_max, cfg.replicates,
                        late_median, 0.0, 0.0, late_median == 0.0);
    }
    if (cfg.graph == LilGraph::zd && cfg.K == 2) {
        const double exact = expected_pair_collisions_zd(cfg.n_max);
        const double mean = pair_means.back();
        const double rel = std::abs(mean - exact) / exact;
        rep.add_verdict("mean_pairwise_vs_exact", cfg.n_max, cfg.replicates,
                        mean, exact, cfg.mean_oracle_tolerance,
                        rel <= cfg.mean_oracle_tolerance);
    }
    return rep;
}

// ---------------------------------------------------------------------
// Backbone coincidences.

ExperimentReport backbone_coincidence_experiment(
    const BackboneCoincidenceConfig& cfg) {
    const auto cps = dyadic_checkpoints(cfg.n_max);
    const auto reps = static_cast<std::size_t>(cfg.replicates);
    std::vector<std::vector<std::int64_t>> counts(
        reps, std::vector<std::int64_t>(cps.size(), 0));

    parallel_for(0, cfg.replicates, cfg.threads, [&](std::int64_t rep) {
        CombWalkerDirect a(RngStream(
            cfg.seed, derive_stream_id(kSaltBackbone, 0,
                                       static_cast<std::uint64_t>(rep))));
        CombWalkerDirect b(RngStream(
            cfg.seed, derive_stream_id(kSaltBackbone, 1,
                                       static_cast<std::uint64_t>(rep))));
        std::int64_t count = 0;
        std::size_t next_cp = 0;
        auto& row = counts[static_cast<std::size_t>(rep)];
        for (std::int64_t m = 1; m <= cfg.n_max; ++m) {
            a.step();
            b.step();
            if (a.position().y == 0 && b.position().y == 0) ++count;
            if (next_cp < cps.size() && m == cps[next_cp]) {
                row[next_cp] = count;
                ++next_cp;
            }
        }
    });

    ExperimentReport rep;
    rep.experiment = "backbone_coincidence";
    rep.master_seed = cfg.seed;
    std::vector<double> means(cps.size());
    for (std::size_t c = 0; c < cps.size(); ++c) {
        std::int64_t total = 0;
        std::vector<std::int64_t> vals(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            vals[r] = counts[r][c];
            total += vals[r];
        }
        means[c] = static_cast<double>(total) / static_cast<double>(reps);
        rep.add_info("simultaneous_backbone_mean", cps[c], cfg.replicates,
                     means[c]);
        rep.add_info("simultaneous_backbone_median", cps[c], cfg.replicates,
                     median_of_i64(vals));
    }
    const double target =
        (2.0 / M_PI) * std::log(static_cast<double>(cfg.n_max));
    const double mean_final = means.back();
    const bool within =
        mean_final <= cfg.factor_band * target &&
        mean_final >= target / cfg.factor_band;
    rep.add_verdict("mean_vs_log_growth", cfg.n_max, cfg.replicates, mean_final,
                    target, cfg.factor_band, within);
    std::size_t first = 0;
    while (first + 1 < cps.size() && cps[first] < 10'000) ++first;
    rep.add_verdict("mean_growth", cfg.n_max, cfg.replicates, mean_final,
                    means[first], 0.0, mean_final > means[first]);
    return rep;
}

// ---------------------------------------------------------------------
// Limiting CDF of D_K / sqrt(n).

ExperimentReport distance_cdf_experiment(const DistanceCdfConfig& cfg) {
    if (cfg.K < 2)
        throw std::invalid_argument("distance_cdf_experiment: K >= 2");
    if (cfg.n < 1 || cfg.replicates < 1)
        throw std::invalid_argument("distance_cdf_experiment: bad sizes");
    const auto reps = static_cast<std::size_t>(cfg.replicates);
    std::vector<double> samples(reps, 0.0);
    std::vector<std::uint8_t> at_zero(reps, 0);

    parallel_for(0, cfg.replicates, cfg.threads, [&](std::int64_t rep) {
        std::vector<ZdWalker> walkers;
        walkers.reserve(static_cast<std::size_t>(cfg.K));
        for (int i = 0; i < cfg.K; ++i)
            walkers.emplace_back(
                1, RngStream(cfg.seed,
                             derive_stream_id(kSaltDistance,
                                              static_cast<std::uint64_t>(i),
                                              static_cast<std::uint64_t>(rep))));
        for (std::int64_t m = 0; m < cfg.n; ++m)
            for (auto& w : walkers) w.step();
        std::int64_t lo = walkers[0].position().coords[0];
        std::int64_t hi = lo;
        for (const auto& w : walkers) {
            const std::int64_t x = w.position().coords[0];
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        const std::int64_t range = hi - lo;
        samples[static_cast<std::size_t>(rep)] =
            static_cast<double>(range) / std::sqrt(static_cast<double>(cfg.n));
        at_zero[static_cast<std::size_t>(rep)] = range == 0 ? 1 : 0;
    });

    std::sort(samples.begin(), samples.end());
    const StatTest ks = ks_test(
        samples, [&](double z) { return z <= 0.0 ? 0.0 : dk_limit_cdf(z, cfg.K); },
        cfg.ks_cap);

    ExperimentReport rep;
    rep.experiment = "distance_cdf";
    rep.master_seed = cfg.seed;
    std::int64_t zeros = 0;
    for (auto z : at_zero) zeros += z;
    const double zero_freq =
        static_cast<double>(zeros) / static_cast<double>(reps);
    rep.add_verdict("ks_distance", cfg.n, cfg.replicates, ks.statistic,
                    0.0, cfg.ks_cap, ks.pass);
    // Empirical CDF at 0 equals the all-walkers collision frequency at n.
    rep.add_info("dk_zero_fraction", cfg.n, cfg.replicates, zero_freq);
    for (double q : {0.25, 0.5, 0.75, 0.9})
        rep.add_info("dk_over_sqrt_n_q" + std::to_string(static_cast<int>(q * 100)),
                     cfg.n, cfg.replicates, quantile(samples, q));
    return rep;
}

// ---------------------------------------------------------------------
// Lower-class behavior of two comb walkers.

ExperimentReport lower_class_experiment(const LowerClassConfig& cfg) {
    if (!(cfg.epsilon > 0.0) || cfg.epsilon >= 0.125)
        throw std::invalid_argument("lower_class: epsilon in (0, 1/8)");
    const auto cps = dyadic_checkpoints(cfg.n_max);
    const auto reps = static_cast<std::size_t>(cfg.replicates);

    // Per-checkpoint small-distance thresholds n^{1/4 - eps} and the
    // upper-class envelope (1+eps) 2^{9/4} 3^{-3/4} n^{1/4} (ll n)^{3/4}.
    std::vector<double> small_thr(cps.size()), envelope_thr(cps.size());
    const double env_const = (1.0 + cfg.epsilon) * std::pow(2.0, 2.25) /
                             std::pow(3.0, 0.75);
    for (std::size_t c = 0; c < cps.size(); ++c) {
        const double n = static_cast<double>(cps[c]);
        small_thr[c] = std::pow(n, 0.25 - cfg.epsilon);
        envelope_thr[c] =
            env_const * std::pow(n, 0.25) * std::pow(log_log(cps[c]), 0.75);
    }

    std::vector<std::vector<std::uint8_t>> diff_teeth_small(
        reps, std::vector<std::uint8_t>(cps.size(), 0));
    std::vector<std::vector<std::uint8_t>> same_tooth_small(
        reps, std::vector<std::uint8_t>(cps.size(), 0));
    std::vector<std::uint8_t> ever_event(reps, 0);
    std::vector<std::uint8_t> final_above(reps, 0);

    parallel_for(0, cfg.replicates, cfg.threads, [&](std::int64_t rep) {
        const auto r = static_cast<std::size_t>(rep);
        CombWalkerDirect a(RngStream(
            cfg.seed,
            derive_stream_id(kSaltLower, 0, static_cast<std::uint64_t>(rep))));
        CombWalkerDirect b(RngStream(
            cfg.seed,
            derive_stream_id(kSaltLower, 1, static_cast<std::uint64_t>(rep))));
        std::size_t next_cp = 0;
        for (std::int64_t m = 1; m <= cfg.n_max; ++m) {
            a.step();
            b.step();
            if (next_cp < cps.size() && m == cps[next_cp]) {
                const auto pa = a.position();
                const auto pb = b.position();
                const auto d2 =
                    static_cast<double>(comb_graph_distance(pa, pb));
                if (d2 <= small_thr[next_cp]) {
                    if (pa.x != pb.x)
                        diff_teeth_small[r][next_cp] = 1;
                    else
                        same_tooth_small[r][next_cp] = 1;
                }
                if (d2 <= envelope_thr[next_cp]) ever_event[r] = 1;
                if (next_cp + 1 == cps.size() && d2 > small_thr[next_cp])
                    final_above[r] = 1;
                ++next_cp;
            }
        }
    });

    ExperimentReport rep;
    rep.experiment = "lower_class";
    rep.master_seed = cfg.seed;

    // Log-log fit over checkpoints with enough hits for a stable point;
    // beyond that the event is too rare at desk-scale replicate counts.
    constexpr std::int64_t kMinFitCount = 20;
    std::vector<double> log_ns, log_freqs;
    double first_fit_freq = -1.0, last_fit_freq = -1.0;
    for (std::size_t c = 0; c < cps.size(); ++c) {
        std::int64_t diff_count = 0, same_count = 0;
        for (std::size_t r = 0; r < reps; ++r) {
            diff_count += diff_teeth_small[r][c];
            same_count += same_tooth_small[r][c];
        }
        const double diff_freq =
            static_cast<double>(diff_count) / static_cast<double>(reps);
        const double same_freq =
            static_cast<double>(same_count) / static_cast<double>(reps);
        rep.add_info("small_distance_diff_teeth_freq", cps[c], cfg.replicates,
                     diff_freq);
        rep.add_info("small_distance_same_tooth_freq", cps[c], cfg.replicates,
                     same_freq);
        if (cps[c] >= cfg.slope_fit_min && diff_count >= kMinFitCount) {
            log_ns.push_back(std::log(static_cast<double>(cps[c])));
            log_freqs.push_back(std::log(diff_freq));
            if (first_fit_freq < 0.0) first_fit_freq = diff_freq;
            last_fit_freq = diff_freq;
        }
    }

    const double slope_target = -(0.5 + 3.0 * cfg.epsilon);
    if (log_ns.size() >= 3) {
        const LineFit fit = fit_line(log_ns, log_freqs);
        rep.add_verdict("diff_teeth_decay_slope", cfg.n_max, cfg.replicates,
                        fit.slope, slope_target, cfg.slope_slack,
                        fit.slope <= slope_target + cfg.slope_slack);
        rep.add_verdict("diff_teeth_freq_decreases", cfg.n_max, cfg.replicates,
                        last_fit_freq, first_fit_freq, 0.0,
                        last_fit_freq < first_fit_freq);
    } else {
        rep.add_verdict("diff_teeth_decay_slope", cfg.n_max, cfg.replicates,
                        0.0, slope_target, cfg.slope_slack, false);
    }

    std::int64_t ever = 0, above = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        ever += ever_event[r];
        above += final_above[r];
    }
    const double ever_frac = static_cast<double>(ever) / static_cast<double>(reps);
    const double above_frac =
        static_cast<double>(above) / static_cast<double>(reps);
    rep.add_verdict("upper_envelope_ever_fraction", cfg.n_max, cfg.replicates,
                    ever_frac, cfg.ever_event_min_fraction, 0.0,
                    ever_frac >= cfg.ever_event_min_fraction);
    rep.add_verdict("final_distance_above_fraction", cfg.n_max, cfg.replicates,
                    above_frac, cfg.final_event_min_fraction, 0.0,
                    above_frac >= cfg.final_event_min_fraction);
    return rep;
}

// ---------------------------------------------------------------------
// Tail-bound checks.

double exact_geometric_sum_tail(std::int64_t n, std::int64_t s0) {
    if (n < 1 || s0 < 0)
        throw std::invalid_argument("exact_geometric_sum_tail: bad arguments");
    // P(S = s) = C(s+n-1, n-1) 2^{-(s+n)}; sum until terms are negligible.
    NeumaierSum sum;
    const double log2v = std::log(2.0);
    for (std::int64_t s = s0; s < s0 + 400000; ++s) {
        const double lp = log_gamma(static_cast<double>(s + n)) -
                          log_gamma(static_cast<double>(n)) -
                          log_gamma(static_cast<double>(s + 1)) -
                          static_cast<double>(s + n) * log2v;
        const double p = std::exp(lp);
        sum.add(p);
        if (p < sum.value() * 1e-18 && s > s0 + 64) break;
    }
    return sum.value();
}

double exact_local_time_tail(std::int64_t n, std::int64_t k_min) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("exact_local_time_tail: n must be even");
    // P(xi(0,2m) = k) = C(2m-k, m) 2^{k-2m}, k = 0..m.
    const std::int64_t m = n / 2;
    NeumaierSum sum;
    const double log2v = std::log(2.0);
    for (std::int64_t k = std::max<std::int64_t>(k_min, 0); k <= m; ++k) {
        const double lp = log_gamma(static_cast<double>(2 * m - k + 1)) -
                          log_gamma(static_cast<double>(m + 1)) -
                          log_gamma(static_cast<double>(m - k + 1)) +
                          static_cast<double>(k - 2 * m) * log2v;
        sum.add(std::exp(lp));
    }
    return sum.value();
}

ExperimentReport tail_bound_checks(const TailBoundConfig& cfg) {
    if (cfg.local_time_n < 2 || cfg.local_time_n % 2 != 0)
        throw std::invalid_argument("tail_bound_checks: local_time_n even >= 2");
    ExperimentReport rep;
    rep.experiment = "tail_bounds";
    rep.master_seed = cfg.seed;

    // (i) Max partial-sum deviation of centered geometrics at
    // lambda = sqrt(32 n); the Hoeffding-type bound there is 2 e^{-4}.
    {
        const std::int64_t n = cfg.geometric_n;
        const double lambda = std::sqrt(32.0 * static_cast<double>(n));
        const double bound =
            2.0 * std::exp(-lambda * lambda / (8.0 * static_cast<double>(n)));
        std::vector<std::uint8_t> hits(
            static_cast<std::size_t>(cfg.geometric_samples), 0);
        parallel_for(0, cfg.geometric_samples, cfg.threads, [&](std::int64_t s) {
            RngStream rng(cfg.seed,
                          derive_stream_id(kSaltTail, 1,
                                           static_cast<std::uint64_t>(s)));
            std::int64_t acc = 0, worst = 0;
            for (std::int64_t i = 0; i < n; ++i) {
                acc += sample_geometric(rng) - 1;
                const std::int64_t a = iabs64(acc);
                if (a > worst) worst = a;
            }
            hits[static_cast<std::size_t>(s)] =
                static_cast<double>(worst) > lambda ? 1 : 0;
        });
        std::int64_t total = 0;
        for (auto h : hits) total += h;
        const double freq =
            static_cast<double>(total) / static_cast<double>(cfg.geometric_samples);
        rep.add_verdict("max_partial_sum_tail_vs_bound", n,
                        cfg.geometric_samples, freq, bound, 0.0, freq <= bound);
    }

    // (ii) P(sum G_i >= (1+delta) n): compared against the exact
    // negative-binomial tail at geometric_n, and against the asymptotic
    // 1/n^2 bound at geometric_bound_n (the bound needs n large).
    auto sum_tail_freq = [&](std::int64_t n, std::uint64_t salt) {
        const auto thr = static_cast<std::int64_t>(
            std::ceil((1.0 + cfg.delta) * static_cast<double>(n)));
        std::vector<std::uint8_t> hits(
            static_cast<std::size_t>(cfg.geometric_samples), 0);
        parallel_for(0, cfg.geometric_samples, cfg.threads, [&](std::int64_t s) {
            RngStream rng(cfg.seed,
                          derive_stream_id(kSaltTail, salt,
                                           static_cast<std::uint64_t>(s)));
            std::int64_t acc = 0;
            for (std::int64_t i = 0; i < n; ++i) acc += sample_geometric(rng);
            hits[static_cast<std::size_t>(s)] = acc >= thr ? 1 : 0;
        });
        std::int64_t total = 0;
        for (auto h : hits) total += h;
        return static_cast<double>(total) /
               static_cast<double>(cfg.geometric_samples);
    };
    {
        const std::int64_t n = cfg.geometric_n;
        const auto thr = static_cast<std::int64_t>(
            std::ceil((1.0 + cfg.delta) * static_cast<double>(n)));
        const double exact = exact_geometric_sum_tail(n, thr);
        const double freq = sum_tail_freq(n, 2);
        const double sigma = std::sqrt(
            exact * (1.0 - exact) / static_cast<double>(cfg.geometric_samples));
        rep.add_verdict("geom_sum_tail_vs_exact", n, cfg.geometric_samples,
                        freq, exact, 4.0 * sigma,
                        std::abs(freq - exact) <= 4.0 * sigma);
        rep.add_info("geom_sum_tail_exact", n, 0, exact);
        rep.add_info("geom_sum_inverse_square_bound", n, 0,
                     1.0 / (static_cast<double>(n) * static_cast<double>(n)));
    }
    {
        const std::int64_t n = cfg.geometric_bound_n;
        const double bound =
            1.0 / (static_cast<double>(n) * static_cast<double>(n));
        const double freq = sum_tail_freq(n, 3);
        const double sigma = std::sqrt(
            bound * (1.0 - bound) / static_cast<double>(cfg.geometric_samples));
        rep.add_verdict("geom_sum_tail_vs_bound", n, cfg.geometric_samples,
                        freq, bound, 3.0 * sigma, freq <= bound + 3.0 * sigma);
    }

    // (iii) Local-time tail of the line walk: fitted slope of the
    // log-frequency against x^2/2, compared to the slope of the exact
    // finite-n law on the same grid.
    {
        const std::int64_t n = cfg.local_time_n;
        const double sqn = std::sqrt(static_cast<double>(n));
        const std::vector<double> xs = {1.5, 2.0, 2.5};
        std::vector<std::int64_t> kmins;
        kmins.reserve(xs.size());
        for (double x : xs)
            kmins.push_back(static_cast<std::int64_t>(std::ceil(x * sqn)));
        std::vector<std::int64_t> counts(xs.size(), 0);
        std::vector<std::int64_t> values(
            static_cast<std::size_t>(cfg.local_time_samples), 0);
        parallel_for(0, cfg.local_time_samples, cfg.threads,
                     [&](std::int64_t s) {
                         RngStream rng(cfg.seed,
                                       derive_stream_id(
                                           kSaltTail, 4,
                                           static_cast<std::uint64_t>(s)));
                         std::int64_t pos = 0, lt = 0;
                         for (std::int64_t i = 0; i < n; ++i) {
                             pos += (rng.next_u64() & 1) ? 1 : -1;
                             if (pos == 0) ++lt;
                         }
                         values[static_cast<std::size_t>(s)] = lt;
                     });
        for (auto lt : values)
            for (std::size_t i = 0; i < kmins.size(); ++i)
                if (lt >= kmins[i]) ++counts[i];

        std::vector<double> half_x2, log_freq, log_exact;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double freq = static_cast<double>(counts[i]) /
                                static_cast<double>(cfg.local_time_samples);
            rep.add_info("local_time_tail_freq_x" +
                             std::to_string(static_cast<int>(xs[i] * 10)),
                         n, cfg.local_time_samples, freq);
            half_x2.push_back(0.5 * xs[i] * xs[i]);
            log_freq.push_back(std::log(freq));
            log_exact.push_back(std::log(exact_local_time_tail(n, kmins[i])));
        }
        const double slope = fit_line(half_x2, log_freq).slope;
        const double exact_slope = fit_line(half_x2, log_exact).slope;
        rep.add_verdict("local_time_tail_slope", n, cfg.local_time_samples,
                        slope, exact_slope, cfg.slope_slack,
                        std::abs(slope - exact_slope) <= cfg.slope_slack);
        rep.add_info("local_time_tail_slope_normal_limit", n, 0, -1.0);
    }
    return rep;
}

}  // namespace combwalk
