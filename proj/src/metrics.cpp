#include "wildfire/metrics.hpp"

#include <cmath>
#include <limits>

namespace wildfire {

namespace {

MetricsRecord compute_with_cells(const WorldState& world, const GridSpec& grid,
                                 const CameraIntrinsics& cam,
                                 std::span<const double> cells) {
    MetricsRecord r;
    r.step = world.step;

    std::vector<Pose> poses;
    poses.reserve(world.agents.size());
    for (const AgentState& a : world.agents) {
        poses.push_back({{a.pose.x, a.pose.y}, a.pose.z});
        r.mean_position += a.pose;
        r.zeta_count += a.zeta;
        r.aborted_agent_steps += a.aborted ? 1 : 0;
    }
    const std::size_t n = world.agents.size();
    if (n > 0) {
        r.mean_position = r.mean_position * (1.0 / static_cast<double>(n));
        r.min_altitude = std::numeric_limits<double>::infinity();
        double var = 0.0;
        for (const AgentState& a : world.agents) {
            r.min_altitude = std::min(r.min_altitude, a.pose.z);
            const double d = a.pose.z - r.mean_position.z;
            var += d * d;
        }
        r.altitude_std = std::sqrt(var / static_cast<double>(n));
    }

    r.min_pairwise_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            r.min_pairwise_distance = std::min(
                r.min_pairwise_distance, distance(world.agents[i].pose, world.agents[j].pose));
        }
    }

    r.objective_H = objective_H_cached(poses, cells, cam, grid);

    long fire_cells = 0, covered = 0;
    const double dx = (grid.xmax - grid.xmin) / grid.nx;
    const double dy = (grid.ymax - grid.ymin) / grid.ny;
    std::size_t idx = 0;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.ymin + (j + 0.5) * dy;
        for (int i = 0; i < grid.nx; ++i, ++idx) {
            if (cells[idx] <= cam.intensity_min) continue;
            ++fire_cells;
            const Vec2 q{grid.xmin + (i + 0.5) * dx, y};
            for (const Pose& p : poses) {
                if (p.altitude > 0.0 && contains(p, cam, q)) {
                    ++covered;
                    break;
                }
            }
        }
    }
    r.covered_fire_fraction =
        fire_cells > 0 ? static_cast<double>(covered) / static_cast<double>(fire_cells) : 0.0;
    return r;
}

} // namespace

MetricsRecord compute_metrics(const WorldState& world, const GridSpec& grid,
                              const CameraIntrinsics& cam) {
    std::vector<double> cells;
    grid_intensities(world.snapshot, grid, cells);
    return compute_with_cells(world, grid, cam, cells);
}

MetricsRecord MetricsEvaluator::compute(const WorldState& world) {
    if (world.snapshot.time() != cached_fire_time_) {
        grid_intensities(world.snapshot, grid_, cells_);
        cached_fire_time_ = world.snapshot.time();
    }
    return compute_with_cells(world, grid_, cam_, cells_);
}

} // namespace wildfire
