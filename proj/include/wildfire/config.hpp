#pragma once

#include <string>

#include "wildfire/coverage_tracking.hpp"
#include "wildfire/swarm_runtime.hpp"

namespace wildfire {

/// Raised on parse or validation failure; the message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything a scenario needs, loaded from a flat `section.key = value`
/// file. Field defaults are the shipped border-focus scenario's companions;
/// the bundled files override what each experiment changes.
struct ScenarioConfig {
    // run.
    long steps = 6000;
    double dt = 1.0;
    std::uint64_t seed = 42;
    long snapshot_every = 1000;
    int threads = 1;

    // agents.
    int agent_count = 10;
    Vec2 start_center{300, 300};
    double jitter_radius = 20.0;

    // rendezvous.
    Vec3 rendezvous{500, 500, 60};

    // wind.
    WindModel wind{M_PI / 8.0, 1.0, 5.0, 2.0};
    bool wind_shared = false;

    // spread. / fire.
    SpreadParams spread{25.0, 1.0};
    int fire_step_every = 100;
    double min_front_separation = 5.0;
    int fire_seed_count = 5;
    Vec2 fire_center{500, 500};
    double fire_seed_spacing = 10.0;
    double fire_sigma = 8.0;
    double intensity_cutoff_sigmas = 0.0; // 0 = exact summation

    // camera.
    CameraIntrinsics camera{10.0, 1e-4, M_PI / 6.0, M_PI / 4.0, 0.005, 0.1, 1.0, 1.5e-5, false};

    // coverage.
    ControllerGains gains{1e-9, 2e-10, 1.0, 0.0};
    FovDiscretization discretization{1024, 64};

    // safety. / potential.
    SafetyParams safety{10.0, 15.0, 2.1, 1e3};
    double rendezvous_gain = 0.06;
    double desired_gain = 0.06;
    double max_altitude = 120.0; // ceiling used by the comm-radius bound

    // comm.
    double comm_radius = 500.0;

    // grid.
    GridSpec grid{0, 0, 1200, 1200, 128, 128};
};

/// Parses and validates a scenario file. Unknown keys and invariant
/// violations throw ConfigError naming the key.
ScenarioConfig load_config(const std::string& path);

/// Parses from an in-memory string (same grammar as load_config).
ScenarioConfig parse_config(const std::string& text);

/// Renders the full key set; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ScenarioConfig& config);

/// Re-checks every invariant on an already-built config.
void validate_config(const ScenarioConfig& config);

/// Deterministically builds the initial world: a ring of fire seed sources
/// around the fire center and agents jittered around the start center on
/// the ground, all from the scenario seed.
WorldState build_world(const ScenarioConfig& config);

} // namespace wildfire
