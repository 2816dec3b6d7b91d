// Artifact emission: the versioned CSV schema and the JSON summary.
//
// CSV schema v1, one row per statistic:
//   experiment,checkpoint_n,replicate_count,statistic_name,value,target,
//   tolerance,verdict
// Floats are printed with %.17g so identical runs are byte-identical.

#ifndef COMBWALK_REPORT_HPP
#define COMBWALK_REPORT_HPP

#include <string>
#include <vector>

#include "combwalk/experiments.hpp"

namespace combwalk {

inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kCsvHeader =
    "experiment,checkpoint_n,replicate_count,statistic_name,value,target,"
    "tolerance,verdict";

std::string report_to_csv(const std::vector<ExperimentReport>& reports);

/// JSON summary with provenance (config hash, seed), verdicts and a
/// per-experiment claim tag. Wall time is included here and deliberately
/// kept out of the CSV.
std::string report_to_json(const std::vector<ExperimentReport>& reports,
                           const std::string& config_canonical,
                           const std::string& claim_tag);

std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace combwalk

#endif  // COMBWALK_REPORT_HPP
