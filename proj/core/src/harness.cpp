#include "combwalk/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#include "combwalk/battery.hpp"
#include "combwalk/greenfn.hpp"
#include "combwalk/hitting.hpp"
#include "combwalk/kernel.hpp"
#include "combwalk/limitdist.hpp"
#include "combwalk/report.hpp"
#include "combwalk/walkers.hpp"

namespace combwalk {

namespace {

std::string claim_tag(const std::string& kind) {
    if (kind == "lil_profile") return "lil-running-max-bands";
    if (kind == "collision_growth") return "collision-dichotomy";
    if (kind == "backbone_coincidence") return "backbone-coincidence-growth";
    if (kind == "distance_cdf") return "distance-limit-cdf";
    if (kind == "lower_class") return "lower-class-events";
    if (kind == "tail_bounds") return "tail-bounds";
    if (kind == "series_classify") return "series-criterion";
    if (kind == "kernel_table") return "exact-kernel";
    if (kind == "reversibility") return "reversibility-identity";
    if (kind == "backbone_return") return "backbone-return-asymptotic";
    if (kind == "vertical_profile") return "tooth-profile-bound";
    if (kind == "green_function") return "green-functions";
    if (kind == "hitting_pmf" || kind == "hitting_limit")
        return "first-passage-law";
    if (kind == "dk_limit") return "distance-limit-cdf";
    if (kind == "verify_all") return "verification-battery";
    return "trajectory-sampling";
}

LilGraph parse_graph(const std::string& g) {
    return g == "comb" ? LilGraph::comb : LilGraph::zd;
}

ExperimentReport run_lil(const ExperimentConfig& cfg, std::uint64_t seed,
                         unsigned threads) {
    LilConfig c;
    c.graph = parse_graph(cfg.get_or("graph", "zd"));
    const std::string stat = cfg.get_or("statistic", "d_k");
    c.statistic = stat == "abs_c1"   ? LilStatistic::abs_c1
                  : stat == "abs_c2" ? LilStatistic::abs_c2
                  : stat == "norm_s" ? LilStatistic::norm_s
                                     : LilStatistic::d_k;
    c.d = static_cast<int>(cfg.get_i64("d", 1));
    c.K = static_cast<int>(cfg.get_i64("k", 2));
    c.n_max = cfg.get_i64("n_max", 1'000'000);
    c.replicates = cfg.get_i64("replicates", 200);
    c.band_lo_factor = cfg.get_dbl("band_lo_factor", 0.0);
    c.band_hi_factor = cfg.get_dbl("band_hi_factor", 0.0);
    c.seed = seed;
    c.threads = threads;
    return lil_profile_report(c);
}

ExperimentReport run_collision(const ExperimentConfig& cfg, std::uint64_t seed,
                               unsigned threads) {
    CollisionGrowthConfig c;
    c.graph = parse_graph(cfg.get_or("graph", "zd"));
    c.d = static_cast<int>(cfg.get_i64("d", 1));
    c.K = static_cast<int>(cfg.get_i64("k", 2));
    c.n_max = cfg.get_i64("n_max", 1'000'000);
    c.replicates = cfg.get_i64("replicates", 200);
    c.late_window_start = cfg.get_i64("late_window_start", 10'000);
    c.mean_oracle_tolerance = cfg.get_dbl("mean_tolerance", 0.05);
    c.seed = seed;
    c.threads = threads;
    return collision_growth_experiment(c);
}

ExperimentReport run_backbone(const ExperimentConfig& cfg, std::uint64_t seed,
                              unsigned threads) {
    BackboneCoincidenceConfig c;
    c.n_max = cfg.get_i64("n_max", 1'000'000);
    c.replicates = cfg.get_i64("replicates", 200);
    c.factor_band = cfg.get_dbl("factor_band", 2.0);
    c.seed = seed;
    c.threads = threads;
    return backbone_coincidence_experiment(c);
}

ExperimentReport run_distance_cdf(const ExperimentConfig& cfg,
                                  std::uint64_t seed, unsigned threads) {
    DistanceCdfConfig c;
    c.K = static_cast<int>(cfg.get_i64("k", 2));
    c.n = cfg.get_i64("n", 10'000);
    c.replicates = cfg.get_i64("replicates", 100'000);
    c.ks_cap = cfg.get_dbl("ks_cap", 0.02);
    c.seed = seed;
    c.threads = threads;
    return distance_cdf_experiment(c);
}

ExperimentReport run_lower_class(const ExperimentConfig& cfg,
                                 std::uint64_t seed, unsigned threads) {
    LowerClassConfig c;
    c.n_max = cfg.get_i64("n_max", 1'000'000);
    c.replicates = cfg.get_i64("replicates", 10'000);
    c.epsilon = cfg.get_dbl("epsilon", 0.05);
    c.slope_fit_min = cfg.get_i64("slope_fit_min", 32);
    c.slope_slack = cfg.get_dbl("slope_slack", 0.15);
    c.ever_event_min_fraction = cfg.get_dbl("ever_event_min_fraction", 0.5);
    c.final_event_min_fraction = cfg.get_dbl("final_event_min_fraction", 0.99);
    c.seed = seed;
    c.threads = threads;
    return lower_class_experiment(c);
}

ExperimentReport run_tail_bounds(const ExperimentConfig& cfg,
                                 std::uint64_t seed, unsigned threads) {
    TailBoundConfig c;
    c.geometric_n = cfg.get_i64("geometric_n", 100);
    c.geometric_bound_n = cfg.get_i64("geometric_bound_n", 400);
    c.delta = cfg.get_dbl("delta", 0.5);
    c.geometric_samples = cfg.get_i64("geometric_samples", 1'000'000);
    c.local_time_n = cfg.get_i64("local_time_n", 10'000);
    c.local_time_samples = cfg.get_i64("local_time_samples", 200'000);
    c.slope_slack = cfg.get_dbl("slope_slack", 0.2);
    c.seed = seed;
    c.threads = threads;
    return tail_bound_checks(c);
}

ExperimentReport run_series(const ExperimentConfig& cfg) {
    SeriesCriterion crit;
    crit.family = cfg.get_or("family", "power") == "logpower"
                      ? SeriesFamily::logpower
                      : SeriesFamily::power;
    crit.param = cfg.get_dbl("param", 0.5);
    crit.exponent_p = static_cast<int>(cfg.get_i64("exponent_p", 1));
    const SeriesClass result = series_classify(crit);
    ExperimentReport rep;
    rep.experiment = "series_classify";
    // classification_code: 0 divergent, 1 convergent, 2 inconclusive.
    const double code = result == SeriesClass::convergent    ? 1.0
                        : result == SeriesClass::divergent   ? 0.0
                                                             : 2.0;
    rep.add_info("classification_code", 0, 1, code);
    return rep;
}

template <class Traj>
void emit_trajectory_rows(ExperimentReport& rep, const Traj& traj,
                          std::int64_t rep_index, bool comb) {
    const std::string prefix =
        rep_index < 0 ? std::string()
                      : "rep" + std::to_string(rep_index) + "/";
    for (const auto& cp : traj.checkpoints) {
        if constexpr (requires { cp.state.x; }) {
            rep.add_info(prefix + "x", cp.time, 1,
                         static_cast<double>(cp.state.x));
            rep.add_info(prefix + "y", cp.time, 1,
                         static_cast<double>(cp.state.y));
        } else {
            for (std::size_t i = 0; i < cp.state.coords.size(); ++i)
                rep.add_info(prefix + "coord_" + std::to_string(i), cp.time, 1,
                             static_cast<double>(cp.state.coords[i]));
        }
    }
    if (comb) {
        rep.add_info(prefix + "horizontal_steps", traj.steps, 1,
                     static_cast<double>(traj.horizontal_steps));
        rep.add_info(prefix + "vertical_steps", traj.steps, 1,
                     static_cast<double>(traj.vertical_steps));
    }
    rep.add_info(prefix + "local_time_zero", traj.steps, 1,
                 static_cast<double>(traj.local_time_zero));
    rep.add_info(prefix + "max_abs_horizontal", traj.steps, 1,
                 static_cast<double>(traj.max_abs_horizontal));
}

ExperimentReport run_simulate(const ExperimentConfig& cfg, std::uint64_t seed) {
    const std::int64_t n = cfg.get_i64("n", 1000);
    const std::int64_t replicates = cfg.get_i64("replicates", 1);
    CheckpointSchedule schedule;
    schedule.record_full = cfg.get_or("record", "checkpoints") == "full";
    ExperimentReport rep;
    rep.experiment = cfg.kind;
    for (std::int64_t r = 0; r < replicates; ++r) {
        const std::int64_t tag = replicates > 1 ? r : -1;
        if (cfg.kind == "zd_walk") {
            const auto d = static_cast<std::size_t>(cfg.get_i64("d", 1));
            const auto traj = simulate_zd(
                d, n, RngStream(seed, derive_stream_id(0x73696d, 0, static_cast<std::uint64_t>(r))),
                schedule);
            emit_trajectory_rows(rep, traj, tag, false);
        } else if (cfg.kind == "comb_direct") {
            const auto traj = simulate_comb_direct(
                n, RngStream(seed, derive_stream_id(0x73696d, 1, static_cast<std::uint64_t>(r))),
                schedule);
            emit_trajectory_rows(rep, traj, tag, true);
        } else {
            const auto run = simulate_comb_constructed(
                n, seed, derive_stream_id(0x73696d, 2, static_cast<std::uint64_t>(r)),
                schedule);
            emit_trajectory_rows(rep, run.trajectory, tag, true);
        }
    }
    return rep;
}

ExperimentReport run_exact(const ExperimentConfig& cfg, unsigned threads,
                           const std::string& out_dir,
                           std::vector<std::string>& artifacts) {
    ExperimentReport rep;
    rep.experiment = cfg.kind;
    if (cfg.kind == "kernel_table") {
        const CombVertex start{cfg.get_i64("start_x", 0), cfg.get_i64("start_y", 0)};
        const std::int64_t n = cfg.get_i64("n", 0);
        std::string text;
        if (cfg.get_or("rational", "false") == "true") {
            CombKernelExact exact(start);
            exact.run_to(n);
            KernelTable table;
            table.start = start;
            table.steps = n;
            for (const auto& [v, num] : exact.cells())
                table.entries.push_back(
                    {v.x, v.y, static_cast<double>(exact.prob_at(v))});
            text = table.to_text();
            rep.add_info("entries", n, 1, static_cast<double>(table.entries.size()));
        } else {
            const KernelTable table = comb_kernel_dp(start, n, threads);
            text = table.to_text();
            rep.add_info("entries", n, 1, static_cast<double>(table.entries.size()));
            rep.add_info("total_mass", n, 1, table.total_mass);
        }
        const std::string path = out_dir + "/kernel_table.txt";
        write_text_file(path, text);
        artifacts.push_back(path);
    } else if (cfg.kind == "reversibility") {
        const CombVertex u{cfg.get_i64("ux", 0), cfg.get_i64("uy", 0)};
        const CombVertex v{cfg.get_i64("vx", 0), cfg.get_i64("vy", 2)};
        const std::int64_t n = cfg.get_i64("n", 2);
        const double tol = cfg.get_dbl("tolerance", 1e-12);
        const double defect = reversibility_defect(u, v, n, threads);
        rep.add_verdict("deg_weighted_defect", n, 1, defect, 0.0, tol,
                        defect <= tol);
    } else if (cfg.kind == "backbone_return") {
        const std::int64_t n = cfg.get_i64("n", 0);
        const double p = backbone_return_prob(n, threads);
        rep.add_info("backbone_return_prob", n, 1, p);
        if (n > 0)
            rep.add_info("ratio_to_asymptotic", n, 1,
                         p / std::sqrt(2.0 / (M_PI * static_cast<double>(n))));
    } else if (cfg.kind == "vertical_profile") {
        const auto prof = vertical_profile_bound(cfg.get_i64("n", 1024),
                                                 cfg.get_i64("k_max", 16), threads);
        for (std::size_t i = 0; i < prof.ks.size(); ++i)
            rep.add_info("scaled_prob_k" + std::to_string(prof.ks[i]), prof.n,
                         1, prof.scaled_probs[i]);
        rep.add_info("sup", prof.n, 1, prof.sup);
        rep.add_info("arg_sup", prof.n, 1, static_cast<double>(prof.arg_sup));
    } else if (cfg.kind == "green_function") {
        const double z = cfg.get_dbl("z", 0.5);
        const auto pt = generating_functions(z);
        rep.add_info("g", 0, 1, pt.g);
        rep.add_info("f1", 0, 1, pt.f1);
        rep.add_info("f2", 0, 1, pt.f2);
        rep.add_info("h", 0, 1, pt.h);
        rep.add_info("green_value", 0, 1,
                     green_function_eval(cfg.get_i64("k", 0),
                                         cfg.get_i64("l", 0), z));
    } else if (cfg.kind == "hitting_pmf") {
        rep.add_info("pmf", cfg.get_i64("n", 1), 1,
                     hitting_pmf(cfg.get_i64("r", 1), cfg.get_i64("n", 1)));
    } else if (cfg.kind == "hitting_limit") {
        rep.add_info("limit_cdf", 0, 1,
                     hitting_limit_cdf(cfg.get_dbl("u", 1.0)));
    } else {  // dk_limit
        rep.add_info("dk_limit_cdf", 0, 1,
                     dk_limit_cdf(cfg.get_dbl("z", 1.0),
                                  static_cast<int>(cfg.get_i64("k", 2))));
    }
    return rep;
}

}  // namespace

RunOutcome run_config(const ExperimentConfig& raw_cfg, const RunOptions& opts) {
    ExperimentConfig cfg = raw_cfg;
    if (opts.seed) cfg.values["seed"] = std::to_string(*opts.seed);
    if (opts.threads) cfg.values["threads"] = std::to_string(*opts.threads);
    if (!opts.out_dir.empty()) cfg.values["out_dir"] = opts.out_dir;
    if (!opts.format.empty()) cfg.values["format"] = opts.format;

    const std::uint64_t seed = cfg.get_u64("seed", 1);
    const auto threads = static_cast<unsigned>(cfg.get_u64("threads", 1));
    std::string out_dir = cfg.get_or("out_dir", "");
    if (out_dir.empty()) {
        const char* env = std::getenv(kOutDirEnvVar);
        out_dir = env && *env ? env : "combwalk-out";
    }
    const std::string format = cfg.get_or("format", "both");
    std::filesystem::create_directories(out_dir);

    RunOutcome outcome;
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.kind == "verify_all") {
        BatteryConfig bc;
        bc.seed = seed;
        bc.threads = threads;
        bc.quick = cfg.get_or("scale", "full") == "quick";
        outcome.reports = run_battery(bc);
    } else if (cfg.kind == "lil_profile") {
        outcome.reports.push_back(run_lil(cfg, seed, threads));
    } else if (cfg.kind == "collision_growth") {
        outcome.reports.push_back(run_collision(cfg, seed, threads));
    } else if (cfg.kind == "backbone_coincidence") {
        outcome.reports.push_back(run_backbone(cfg, seed, threads));
    } else if (cfg.kind == "distance_cdf") {
        outcome.reports.push_back(run_distance_cdf(cfg, seed, threads));
    } else if (cfg.kind == "lower_class") {
        outcome.reports.push_back(run_lower_class(cfg, seed, threads));
    } else if (cfg.kind == "tail_bounds") {
        outcome.reports.push_back(run_tail_bounds(cfg, seed, threads));
    } else if (cfg.kind == "series_classify") {
        outcome.reports.push_back(run_series(cfg));
    } else if (cfg.kind == "zd_walk" || cfg.kind == "comb_direct" ||
               cfg.kind == "comb_constructed") {
        outcome.reports.push_back(run_simulate(cfg, seed));
    } else {
        outcome.reports.push_back(
            run_exact(cfg, threads, out_dir, outcome.artifacts));
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double wall =
        std::chrono::duration<double>(t1 - t0).count();

    for (auto& rep : outcome.reports) {
        if (rep.config_hash.empty()) rep.config_hash = cfg.config_hash();
        if (rep.master_seed == 0) rep.master_seed = seed;
        if (rep.wall_time_s == 0.0)
            rep.wall_time_s = wall / static_cast<double>(outcome.reports.size());
        outcome.all_pass = outcome.all_pass && rep.all_pass();
        outcome.summary += rep.experiment +
                           (rep.all_pass() ? ": pass\n" : ": FAIL\n");
    }

    const std::string base = out_dir + "/" + cfg.kind;
    if (format == "csv" || format == "both") {
        write_text_file(base + ".csv", report_to_csv(outcome.reports));
        outcome.artifacts.push_back(base + ".csv");
    }
    if (format == "json" || format == "both") {
        write_text_file(base + ".json",
                        report_to_json(outcome.reports, cfg.canonical_text(),
                                       claim_tag(cfg.kind)));
        outcome.artifacts.push_back(base + ".json");
    }
    return outcome;
}

}  // namespace combwalk
