// The verify-all battery: every experiment and exact check wired to its
// documented thresholds, producing one ExperimentReport per entry. The
// quick scale trims replicate counts and horizons for smoke/determinism
// runs; the full scale matches the documented acceptance thresholds.

#ifndef COMBWALK_BATTERY_HPP
#define COMBWALK_BATTERY_HPP

#include <cstdint>
#include <vector>

#include "combwalk/experiments.hpp"

namespace combwalk {

struct BatteryConfig {
    std::uint64_t seed = 20250809;
    unsigned threads = 1;
    bool quick = false;
};

std::vector<ExperimentReport> run_battery(const BatteryConfig& cfg);

// Individual battery entries, also used by the acceptance suite.
ExperimentReport battery_stream_checks(const BatteryConfig& cfg);
ExperimentReport battery_series_grid(const BatteryConfig& cfg);
ExperimentReport battery_hitting_checks(const BatteryConfig& cfg);
ExperimentReport battery_dk_quadrature(const BatteryConfig& cfg);
ExperimentReport battery_reversibility(const BatteryConfig& cfg);
ExperimentReport battery_kernel_asymptotics(const BatteryConfig& cfg);
ExperimentReport battery_construction_equivalence(const BatteryConfig& cfg);
ExperimentReport battery_comb_distance_oracle(const BatteryConfig& cfg);
std::vector<ExperimentReport> battery_lil_suite(const BatteryConfig& cfg);
std::vector<ExperimentReport> battery_collision_suite(const BatteryConfig& cfg);
ExperimentReport battery_backbone_coincidence(const BatteryConfig& cfg);
std::vector<ExperimentReport> battery_distance_cdf_suite(const BatteryConfig& cfg);
ExperimentReport battery_lower_class(const BatteryConfig& cfg);
ExperimentReport battery_tail_bounds(const BatteryConfig& cfg);

}  // namespace combwalk

#endif  // COMBWALK_BATTERY_HPP
