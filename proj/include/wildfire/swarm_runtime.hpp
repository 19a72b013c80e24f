#pragma once

#include <span>
#include <vector>

#include "wildfire/coverage_tracking.hpp"
#include "wildfire/fire_model.hpp"
#include "wildfire/potential_field.hpp"
#include "wildfire/sensing_geometry.hpp"

namespace wildfire {

struct AgentParams {
    ControllerGains ctrl;
    AttractGains attract;
    SafetyParams safety;
    CameraIntrinsics cam;
    FovDiscretization disc;
};

struct AgentState {
    int id = 0;
    Vec3 pose;
    Vec3 desired;
    int zeta = 0;
    bool has_desired = false; // desired pins to the pose at the first zeta=1 step
    bool launched = false;    // set once the agent first clears the safe altitude
    bool aborted = false;     // last step hit a repulsion singularity; pose held
    AgentParams params;
};

struct WorldState {
    std::vector<AgentState> agents;
    FireState fire;
    double comm_radius = 500.0;
    long step = 0;

    int fire_step_every = 50;
    FireStepOptions fire_opts;
    double intensity_cutoff_sigmas = 0.0;
    int threads = 1; // agent evaluation lanes inside a step; results are lane-count independent
    Rng fire_rng{0};
    FireSnapshot snapshot; // refreshed whenever the fire advances
};

/// Rebuilds the immutable fire view; call after constructing or mutating
/// `world.fire` by hand.
void refresh_fire_snapshot(WorldState& world);

/// Agents within the communication radius (closed condition, 3D distance).
/// Throws std::out_of_range for an unknown id.
std::vector<const AgentState*> physical_neighbors(const WorldState& world, int id);

struct SenseResult {
    int zeta = 0;
    FovIntensities samples;
};

/// Discretizes the agent's FOV against the fire snapshot. zeta is 1 iff any
/// interior or edge sample reads above the camera's detection floor.
SenseResult sense_fire(const AgentState& agent, const FireSnapshot& fire);

/// One agent's step: sense, switch phase, update the desired position via
/// the coverage gradient when tracking, then potential-field control and
/// integration. Reads only the supplied neighbor views and the snapshot.
AgentState agent_step(const AgentState& agent, std::span<const AgentState* const> neighbors,
                      const FireSnapshot& fire);

/// Synchronous scheduler: evaluates every agent against an immutable
/// snapshot of the world, commits all results at once, and advances the
/// fire every `fire_step_every` steps.
void world_step(WorldState& world);

} // namespace wildfire
