// combwalk command-line front end.
//
// Subcommands:
//   simulate    trajectory generation (zd_walk, comb_direct, comb_constructed)
//   exact       exact computations (kernel tables, generating functions, ...)
//   experiment  Monte Carlo experiments (lil_profile, collision_growth, ...)
//   verify-all  the full verification battery
//
// Exit codes: 0 all verdicts pass, 1 verdict failure, 2 usage/config
// error, 3 resource guard exceeded.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combwalk/config.hpp"
#include "combwalk/errors.hpp"
#include "combwalk/harness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

struct CliArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned threads = 0;
    bool threads_set = false;
    std::string out_dir;
    std::string format;
};

const std::vector<std::string>& family_of(const std::string& subcommand) {
    static const std::vector<std::string> simulate = {
        "zd_walk", "comb_direct", "comb_constructed"};
    static const std::vector<std::string> exact = {
        "kernel_table", "reversibility", "backbone_return", "vertical_profile",
        "green_function", "hitting_pmf", "hitting_limit", "dk_limit"};
    static const std::vector<std::string> experiment = {
        "lil_profile",  "collision_growth", "backbone_coincidence",
        "distance_cdf", "lower_class",      "tail_bounds",
        "series_classify"};
    static const std::vector<std::string> verify = {"verify_all"};
    if (subcommand == "simulate") return simulate;
    if (subcommand == "exact") return exact;
    if (subcommand == "experiment") return experiment;
    return verify;
}

int run_subcommand(const std::string& name, const CliArgs& args) {
    combwalk::ParseResult parsed;
    if (name == "verify-all" && args.config_path.empty()) {
        parsed = combwalk::parse_config_text("kind = verify_all\n");
    } else if (args.config_path.empty()) {
        std::fprintf(stderr, "error: %s requires --config <path>\n",
                     name.c_str());
        return kExitUsage;
    } else {
        parsed = combwalk::parse_config(args.config_path);
    }
    if (!parsed.ok()) {
        std::fprintf(stderr, "config errors (%zu):\n", parsed.errors.size());
        for (const auto& e : parsed.errors)
            std::fprintf(stderr, "  - %s\n", e.c_str());
        return kExitUsage;
    }
    const auto& cfg = *parsed.config;
    const std::string sub = name == "verify-all" ? "verify_all" : name;
    const auto& allowed = family_of(sub == "verify_all" ? "verify-all" : name);
    bool kind_ok = false;
    for (const auto& k : allowed) kind_ok = kind_ok || k == cfg.kind;
    if (!kind_ok) {
        std::fprintf(stderr, "error: kind '%s' is not valid for subcommand %s\n",
                     cfg.kind.c_str(), name.c_str());
        return kExitUsage;
    }

    combwalk::RunOptions opts;
    if (args.seed_set) opts.seed = args.seed;
    if (args.threads_set) opts.threads = args.threads;
    opts.out_dir = args.out_dir;
    opts.format = args.format;

    try {
        const combwalk::RunOutcome outcome = combwalk::run_config(cfg, opts);
        std::fputs(outcome.summary.c_str(), stdout);
        for (const auto& a : outcome.artifacts)
            std::printf("wrote %s\n", a.c_str());
        return outcome.all_pass ? kExitPass : kExitVerdictFailure;
    } catch (const combwalk::ResourceGuardError& e) {
        std::fprintf(stderr, "resource guard: %s\n", e.what());
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerdictFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk distance toolkit (Z^d and the 2-d comb)"};
    app.require_subcommand(1);

    CliArgs args;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", args.config_path, "config file path");
        sub->add_option("--seed", args.seed, "master seed override")
            ->each([&](const std::string&) { args.seed_set = true; });
        sub->add_option("--threads", args.threads,
                        "worker threads (0 = hardware)")
            ->each([&](const std::string&) { args.threads_set = true; });
        sub->add_option("--out", args.out_dir, "artifact output directory");
        sub->add_option("--format", args.format, "csv|json|both")
            ->check(CLI::IsMember({"csv", "json", "both"}));
    };
    add_common(app.add_subcommand("simulate", "generate trajectories"));
    add_common(app.add_subcommand("exact", "exact computations"));
    add_common(app.add_subcommand("experiment", "Monte Carlo experiments"));
    add_common(app.add_subcommand("verify-all", "run the verification battery"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    return run_subcommand(app.get_subcommands().front()->get_name(), args);
}
