// Acceptance harness: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 4/5/8 drive the bundled scenario files, so run
// this from the repository root (or set FIRECOV_CONFIG_DIR).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wildfire/config.hpp"
#include "wildfire/metrics.hpp"
#include "wildfire/sim.hpp"

using namespace wildfire;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", n, what, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

std::string config_dir() {
    if (const char* d = std::getenv("FIRECOV_CONFIG_DIR")) return d;
    return "configs";
}

// ---------------------------------------------------------------- criterion 1

void criterion_gradient_oracle() {
    const auto t0 = std::chrono::steady_clock::now();

    // Square half-angles and a grid cell equal to the 2*eps window keep the
    // staircase of the discretized objective aligned with the difference
    // quotient; see the coverage unit tests for the same construction. The
    // three agents are jittered inside disjoint sectors around an elongated
    // two-source fire so every FOV crosses the fire front transversally with
    // a long chord: short tangential chords make the difference quotient
    // itself a poor estimate (single-cell quantization), which would test the
    // grid rather than the gradient.
    CameraIntrinsics cam;
    cam.half_angle_x = M_PI / 4.0;
    cam.half_angle_y = M_PI / 4.0;

    FireState blob;
    blob.sources.push_back({{11, 12}, {5.5, 2.5}, true});
    blob.sources.push_back({{15, 14}, {5.5, 2.5}, true});
    const FireSnapshot fire(blob);
    const GridSpec grid{0, 0, 25.6, 25.6, 128, 128};
    const FovDiscretization disc{4096, 256};
    const double eps = 0.1;

    Rng rng(2024);
    int checked = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Pose> agents;
        { // north of the fire, leading -y edge over the long top side
            const double z = rng.uniform(4.0, 5.0);
            const double cx = rng.uniform(16.0, 17.5);
            const double ymin = rng.uniform(14.6, std::min(16.0, 25.4 - 2 * z));
            agents.push_back({{cx, ymin + z}, z});
        }
        { // south, leading +y edge over the bottom side
            const double z = rng.uniform(4.0, 5.0);
            const double cx = rng.uniform(16.0, 17.5);
            const double ymax = rng.uniform(std::max(10.0, 2 * z + 0.2), 11.4);
            agents.push_back({{cx, ymax - z}, z});
        }
        { // west, leading +x edge crossing the fire vertically
            const double z = rng.uniform(4.0, 4.5);
            const double xmax = rng.uniform(9.8, 10.8);
            agents.push_back({{xmax - z, rng.uniform(13.8, 14.2)}, z});
        }

        for (int i = 0; i < 3; ++i) {
            std::vector<Pose> others;
            for (int j = 0; j < 3; ++j) {
                if (j != i) others.push_back(agents[j]);
            }
            const GradientResult g = local_gradient(agents[i], others, fire, cam, disc);

            const auto H = [&](double dx, double dy, double dz) {
                std::vector<Pose> moved = agents;
                moved[i].lateral.x += dx;
                moved[i].lateral.y += dy;
                moved[i].altitude += dz;
                return objective_H(moved, fire, cam, grid);
            };
            const double fx = (H(eps, 0, 0) - H(-eps, 0, 0)) / (2 * eps);
            const double fy = (H(0, eps, 0) - H(0, -eps, 0)) / (2 * eps);
            const double fz = (H(0, 0, eps) - H(0, 0, -eps)) / (2 * eps);

            const double dx = g.d_lateral.x - fx;
            const double dy = g.d_lateral.y - fy;
            const double dz = g.d_vertical - fz;
            const double diff = std::sqrt(dx * dx + dy * dy + dz * dz);
            const double ref = std::sqrt(fx * fx + fy * fy + fz * fz);
            if (ref > 0.0) {
                worst = std::max(worst, diff / ref);
                ++checked;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream detail;
    detail << checked << " gradients, worst relative error " << worst << ", " << secs
           << " s";
    report(1, "analytic gradient vs finite differences", worst < 0.05 && secs < 120.0,
           detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_lyapunov_descent() {
    CameraIntrinsics cam;
    cam.half_angle_x = M_PI / 6.0;
    cam.half_angle_y = M_PI / 4.0;

    FireState blob;
    for (double x : {56.0, 64.0, 72.0}) {
        for (double y : {56.0, 64.0, 72.0}) blob.sources.push_back({{x, y}, {6, 6}, true});
    }
    const FireSnapshot fire(blob);
    const GridSpec grid{0, 0, 128, 128, 128, 128};
    const FovDiscretization disc{1024, 64};

    // five agents ringed well outside the blob so each FOV initially covers
    // at most a sliver of fire; they track p_d exactly and repulsion is off
    std::vector<Pose> poses;
    for (int i = 0; i < 5; ++i) {
        const double a = 2.0 * M_PI * i / 5.0;
        poses.push_back({{64.0 + 45.0 * std::sin(a), 64.0 + 45.0 * std::cos(a)}, 40.0});
    }
    ControllerGains gains{1e-7, 2e-10, 1.0, 0.0};

    const double H0 = objective_H(poses, fire, cam, grid);
    double prev = H0;
    int violations = 0;
    double last = H0;
    for (int t = 0; t < 500; ++t) {
        std::vector<Pose> next = poses;
        for (std::size_t i = 0; i < poses.size(); ++i) {
            std::vector<Pose> others;
            for (std::size_t j = 0; j < poses.size(); ++j) {
                if (j != i) others.push_back(poses[j]);
            }
            const GradientResult g = local_gradient(poses[i], others, fire, cam, disc);
            next[i] = update_desired(poses[i], g, gains);
        }
        poses = std::move(next);
        last = objective_H(poses, fire, cam, grid);
        if (last > prev + 1e-6 * H0) ++violations;
        prev = last;
    }

    std::ostringstream detail;
    detail << violations << " ascent steps of 500, H0 " << H0 << " -> " << last;
    report(2, "objective descent while tracking the gradient", violations <= 5 && last < H0,
           detail.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_rendezvous_convergence() {
    WorldState world;
    refresh_fire_snapshot(world); // empty fire: zeta stays 0

    AgentState a;
    a.pose = {300, 300, 0};
    a.params.cam.half_angle_x = M_PI / 6.0;
    a.params.cam.half_angle_y = M_PI / 4.0;
    a.params.attract = {0.06, 0.06, {500, 500, 60}, 1.0};

    const Vec3 pr = a.params.attract.rendezvous;
    double dist = (a.pose - pr).norm();
    bool monotone = true;
    int reached = -1;
    for (int t = 1; t <= 200; ++t) {
        a = agent_step(a, {}, world.snapshot);
        const double next = (a.pose - pr).norm();
        if (next >= dist) monotone = false;
        dist = next;
        if (reached < 0 && dist < 1.0) reached = t;
    }

    std::ostringstream detail;
    detail << "reached <1 unit at step " << reached << ", final distance " << dist;
    report(3, "phase-1 rendezvous convergence", monotone && reached > 0 && dist < 1.0,
           detail.str());
}

// ------------------------------------------------------- criteria 4, 5 and 8

struct ScenarioResult {
    bool completed = false;
    double seconds = 0.0;
    bool spacing_ok = true;     // min pairwise >= 0.8 d after step 1000
    double worst_spacing = 1e30;
    bool altitude_ok = true;    // min altitude >= z_min after step 1000
    double worst_altitude = 1e30;
    double mean_x_1000 = 0, mean_y_1000 = 0, mean_x_end = 0, mean_y_end = 0;
    double altitude_std_end = 0;
    std::string trajectories;
};

ScenarioResult run_bundled(const std::string& name, int threads_override) {
    ScenarioResult r;
    ScenarioConfig cfg = load_config(config_dir() + "/" + name);
    if (threads_override > 0) cfg.threads = threads_override;

    const auto dir = std::filesystem::temp_directory_path() /
                     ("firecov_acc_" + name + "_" + std::to_string(threads_override));
    std::filesystem::remove_all(dir);

    const auto t0 = std::chrono::steady_clock::now();
    const RunResult run = run_scenario(cfg, dir.string(), true);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.completed = run.exit_code == 0;

    const double spacing_floor = 0.8 * cfg.safety.safe_distance;
    std::ifstream mets(dir / "metrics.csv");
    std::string line;
    std::getline(mets, line); // header
    while (std::getline(mets, line)) {
        std::istringstream row(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(row, cell, ',')) v.push_back(std::atof(cell.c_str()));
        if (v.size() < 11) continue;
        const long step = static_cast<long>(v[0]);
        if (step >= 1000) {
            r.worst_spacing = std::min(r.worst_spacing, v[2]);
            r.worst_altitude = std::min(r.worst_altitude, v[3]);
            if (v[2] < spacing_floor) r.spacing_ok = false;
            if (v[3] < cfg.safety.min_altitude) r.altitude_ok = false;
        }
        if (step == 1000) {
            r.mean_x_1000 = v[5];
            r.mean_y_1000 = v[6];
        }
        if (step == cfg.steps) {
            r.mean_x_end = v[5];
            r.mean_y_end = v[6];
            r.altitude_std_end = v[8];
        }
    }

    std::ifstream traj(dir / "trajectories.csv", std::ios::binary);
    std::ostringstream buf;
    buf << traj.rdbuf();
    r.trajectories = buf.str();
    std::filesystem::remove_all(dir);
    return r;
}

void criteria_scenarios() {
    const ScenarioResult border = run_bundled("scenario_border_focus.cfg", 0);

    {
        const bool drift_ok = border.mean_x_end > border.mean_x_1000 &&
                              border.mean_y_end > border.mean_y_1000;
        std::ostringstream detail;
        detail.precision(6);
        detail << border.seconds << " s; min spacing after t=1000 " << border.worst_spacing
               << " (floor 8); min altitude " << border.worst_altitude
               << " (floor 15); mean drift (" << border.mean_x_end - border.mean_x_1000
               << ", " << border.mean_y_end - border.mean_y_1000 << ")";
        report(4, "border-focus scenario rerun",
               border.completed && border.seconds < 600.0 && border.spacing_ok &&
                   border.altitude_ok && drift_ok,
               detail.str());
    }

    const ScenarioResult uniform = run_bundled("scenario_uniform.cfg", 0);
    {
        std::ostringstream detail;
        detail << "altitude std at end: uniform " << uniform.altitude_std_end
               << " vs border " << border.altitude_std_end;
        report(5, "uniform coverage flattens the altitude spread",
               uniform.completed && uniform.altitude_std_end < border.altitude_std_end,
               detail.str());
    }

    {
        const ScenarioResult serial = run_bundled("scenario_border_focus.cfg", 1);
        const bool identical = !border.trajectories.empty() &&
                               serial.trajectories == border.trajectories;
        report(8, "byte-identical trajectories across thread counts", identical,
               identical ? "" : "trajectories.csv differs");
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_empty_cost() {
    CameraIntrinsics cam;
    cam.half_angle_x = M_PI / 6.0;
    cam.half_angle_y = M_PI / 4.0;
    const double f = joint_cost({0, 0}, {}, cam);
    std::ostringstream detail;
    detail.precision(10);
    detail << "joint cost " << f;
    report(6, "empty-coverage cost equals 1/m", std::abs(f - 66666.67) <= 0.01,
           detail.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion_fire_exactness() {
    const Vec2 off = elliptical_offset(0.0, 0.77, {1.0, 1.0});
    bool ok = off.x == 0.0 && off.y == 0.0;

    FireState calm;
    calm.wind = {0.3, 0.0, 0.0, 0.0}; // U = 0 exactly
    calm.sources.push_back({{500, 500}, {8, 8}, true});
    calm.sources.push_back({{510, 500}, {8, 8}, true});
    Rng rng(1);
    step_fire(calm, rng, {5.0, false});
    ok = ok && calm.sources[0].position.x == 500.0 && calm.sources[0].position.y == 500.0 &&
         calm.sources[1].position.x == 510.0;

    FireState one, two;
    one.sources.push_back({{500, 500}, {8, 8}, true});
    two.sources.push_back({{500, 500}, {8, 8}, true});
    two.sources.push_back({{500, 500}, {8, 8}, true});
    double worst = 0.0;
    Rng probe(2);
    for (int i = 0; i < 500; ++i) {
        const Vec2 q{probe.uniform(400, 600), probe.uniform(400, 600)};
        const double a = intensity_at(one, q);
        const double b = intensity_at(two, q);
        worst = std::max(worst, std::abs(b - 2.0 * a) / (2.0 * a));
    }
    std::ostringstream detail;
    detail << "worst doubling error " << worst;
    report(7, "calm-wind exactness and linear superposition", ok && worst < 1e-12,
           detail.str());
}

// ---------------------------------------------------------------- criterion 9

void criterion_locality() {
    ScenarioConfig cfg;
    cfg.agent_count = 4;
    WorldState world = build_world(cfg);
    world.agents[0].pose = {450, 450, 40};
    world.agents[1].pose = {458, 452, 35};
    world.agents[2].pose = {470, 460, 45};
    world.agents[3].pose = {460, 1200, 50}; // > r from everyone

    WorldState pruned = world;
    pruned.agents.pop_back();

    world_step(world);
    world_step(pruned);

    bool identical = true;
    for (std::size_t i = 0; i < 3; ++i) {
        identical = identical && world.agents[i].pose.x == pruned.agents[i].pose.x &&
                    world.agents[i].pose.y == pruned.agents[i].pose.y &&
                    world.agents[i].pose.z == pruned.agents[i].pose.z &&
                    world.agents[i].zeta == pruned.agents[i].zeta &&
                    world.agents[i].desired.x == pruned.agents[i].desired.x &&
                    world.agents[i].desired.z == pruned.agents[i].desired.z;
    }
    report(9, "agents beyond the communication radius are irrelevant", identical);
}

} // namespace

int main() {
    criterion_gradient_oracle();
    criterion_lyapunov_descent();
    criterion_rendezvous_convergence();
    criteria_scenarios();
    criterion_empty_cost();
    criterion_fire_exactness();
    criterion_locality();

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
