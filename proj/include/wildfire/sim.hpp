#pragma once

#include <string>

#include "wildfire/config.hpp"
#include "wildfire/metrics.hpp"

namespace wildfire {

struct RunResult {
    int exit_code = 0;         // 0 ok, 2 runtime abort (NaN pose)
    long abort_step = -1;      // step at which a NaN was detected
    MetricsRecord final_metrics;
};

/// Runs a validated scenario, writing trajectories.csv, metrics.csv and
/// snapshot artifacts (intensity CSV, world JSON, SVG overlay) into
/// `out_dir`. Deterministic for a fixed config.
RunResult run_scenario(const ScenarioConfig& config, const std::string& out_dir,
                       bool quiet = false);

} // namespace wildfire
