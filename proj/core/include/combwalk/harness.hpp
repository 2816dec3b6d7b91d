// Orchestration: run a validated config, write CSV/JSON artifacts, and
// map outcomes to process exit codes (0 pass, 1 verdict failure, 2
// usage/config error, 3 resource guard) at the CLI boundary.

#ifndef COMBWALK_HARNESS_HPP
#define COMBWALK_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "combwalk/config.hpp"
#include "combwalk/experiments.hpp"

namespace combwalk {

/// Environment variable consulted for the default artifact directory.
inline constexpr const char* kOutDirEnvVar = "COMBWALK_OUT_DIR";

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::string out_dir;  // empty: config value, then $COMBWALK_OUT_DIR
    std::string format;   // empty: config value, default "both"
};

struct RunOutcome {
    std::vector<ExperimentReport> reports;
    std::vector<std::string> artifacts;  // paths written
    std::string summary;                 // one-line outcome per report
    bool all_pass = true;
};

/// Executes the experiment described by `cfg` (with CLI overrides) and
/// writes artifacts. Throws std::invalid_argument for semantic config
/// problems and ResourceGuardError when a budget guard trips.
RunOutcome run_config(const ExperimentConfig& cfg, const RunOptions& opts);

}  // namespace combwalk

#endif  // COMBWALK_HARNESS_HPP
