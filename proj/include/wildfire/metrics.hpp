#pragma once

#include "wildfire/coverage_tracking.hpp"
#include "wildfire/swarm_runtime.hpp"

namespace wildfire {

/// Per-step global diagnostics. Computed by the harness, never visible to
/// agents.
struct MetricsRecord {
    long step = 0;
    double objective_H = 0.0;
    double min_pairwise_distance = 0.0; // +inf for fewer than two agents
    double min_altitude = 0.0;
    double covered_fire_fraction = 0.0;
    Vec3 mean_position;
    double altitude_std = 0.0;
    int zeta_count = 0;
    int aborted_agent_steps = 0;
};

/// Computes a record against the given diagnostics grid and camera.
MetricsRecord compute_metrics(const WorldState& world, const GridSpec& grid,
                              const CameraIntrinsics& cam);

/// Same computation, but grid intensities are cached between fire steps.
class MetricsEvaluator {
public:
    MetricsEvaluator(GridSpec grid, CameraIntrinsics cam)
        : grid_(grid), cam_(cam) {}

    MetricsRecord compute(const WorldState& world);

private:
    GridSpec grid_;
    CameraIntrinsics cam_;
    std::vector<double> cells_;
    long cached_fire_time_ = -1;
};

} // namespace wildfire
