#include "wildfire/sim.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "wildfire/snapshot_io.hpp"
#include "wildfire/svg.hpp"

namespace wildfire {

namespace {

void write_trajectory_rows(std::ofstream& out, const WorldState& world) {
    for (const AgentState& a : world.agents) {
        out << world.step << ',' << a.id << ',' << fmt9(a.pose.x) << ',' << fmt9(a.pose.y)
            << ',' << fmt9(a.pose.z) << ',' << a.zeta << ',' << fmt9(a.desired.x) << ','
            << fmt9(a.desired.y) << ',' << fmt9(a.desired.z) << '\n';
    }
}

void write_metrics_row(std::ofstream& out, const MetricsRecord& m) {
    out << m.step << ',' << fmt9(m.objective_H) << ',' << fmt9(m.min_pairwise_distance)
        << ',' << fmt9(m.min_altitude) << ',' << fmt9(m.covered_fire_fraction) << ','
        << fmt9(m.mean_position.x) << ',' << fmt9(m.mean_position.y) << ','
        << fmt9(m.mean_position.z) << ',' << fmt9(m.altitude_std) << ',' << m.zeta_count
        << ',' << m.aborted_agent_steps << '\n';
}

void write_snapshot(const WorldState& world, const GridSpec& grid,
                    const std::filesystem::path& dir) {
    const std::string tag = "_t" + std::to_string(world.step);
    write_intensity_csv(world.snapshot, grid, (dir / ("intensity" + tag + ".csv")).string());
    write_world_json(world, grid, (dir / ("world" + tag + ".json")).string());
    std::ofstream svg(dir / ("overlay" + tag + ".svg"));
    if (!svg) throw std::runtime_error("cannot write snapshot SVG");
    svg << render_svg(world, grid);
}

bool any_nan_pose(const WorldState& world) {
    for (const AgentState& a : world.agents) {
        if (!std::isfinite(a.pose.x) || !std::isfinite(a.pose.y) ||
            !std::isfinite(a.pose.z))
            return true;
    }
    return false;
}

} // namespace

RunResult run_scenario(const ScenarioConfig& config, const std::string& out_dir,
                       bool quiet) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    WorldState world = build_world(config);
    MetricsEvaluator metrics(config.grid, config.camera);

    std::ofstream traj(dir / "trajectories.csv");
    std::ofstream mets(dir / "metrics.csv");
    if (!traj || !mets) throw std::runtime_error("cannot open output files in " + out_dir);
    traj << "step,agent_id,x,y,z,zeta,desired_x,desired_y,desired_z\n";
    mets << "step,objective_H,min_pairwise_distance,min_altitude,covered_fire_fraction,"
            "mean_x,mean_y,mean_z,altitude_std,zeta_count,aborted_agent_steps\n";

    RunResult result;
    write_trajectory_rows(traj, world);
    result.final_metrics = metrics.compute(world);
    write_metrics_row(mets, result.final_metrics);
    if (config.snapshot_every > 0) write_snapshot(world, config.grid, dir);

    for (long s = 1; s <= config.steps; ++s) {
        world_step(world);

        if (any_nan_pose(world)) {
            std::fprintf(stderr, "abort: non-finite agent pose at step %ld\n", world.step);
            result.exit_code = 2;
            result.abort_step = world.step;
            break;
        }

        write_trajectory_rows(traj, world);
        result.final_metrics = metrics.compute(world);
        write_metrics_row(mets, result.final_metrics);

        if (config.snapshot_every > 0 && s % config.snapshot_every == 0) {
            write_snapshot(world, config.grid, dir);
        }
        if (!quiet && s % 500 == 0) {
            std::fprintf(stderr,
                         "step %ld/%ld  H=%.6g  covered=%.3f  zeta=%d\n", s, config.steps,
                         result.final_metrics.objective_H,
                         result.final_metrics.covered_fire_fraction,
                         result.final_metrics.zeta_count);
        }
    }
    return result;
}

} // namespace wildfire
