#include "wildfire/swarm_runtime.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace wildfire {

void refresh_fire_snapshot(WorldState& world) {
    world.snapshot = FireSnapshot(world.fire, world.intensity_cutoff_sigmas);
}

std::vector<const AgentState*> physical_neighbors(const WorldState& world, int id) {
    const AgentState* self = nullptr;
    for (const AgentState& a : world.agents) {
        if (a.id == id) {
            self = &a;
            break;
        }
    }
    if (!self) throw std::out_of_range("physical_neighbors: unknown agent id");

    std::vector<const AgentState*> out;
    for (const AgentState& a : world.agents) {
        if (a.id == id) continue;
        if (distance(a.pose, self->pose) <= world.comm_radius) out.push_back(&a);
    }
    return out;
}

SenseResult sense_fire(const AgentState& agent, const FireSnapshot& fire) {
    SenseResult r;
    r.samples = sample_fov_intensity(Pose{{agent.pose.x, agent.pose.y}, agent.pose.z},
                                     agent.params.cam, fire, agent.params.disc);
    r.zeta = r.samples.any_fire ? 1 : 0;
    return r;
}

AgentState agent_step(const AgentState& agent, std::span<const AgentState* const> neighbors,
                      const FireSnapshot& fire) {
    AgentState next = agent;
    next.aborted = false;

    try {
        if (agent.pose.z > 0.0) {
            SenseResult sensed = sense_fire(agent, fire);
            next.zeta = sensed.zeta;
            if (next.zeta == 1) {
                if (!next.has_desired) {
                    next.desired = agent.pose;
                    next.has_desired = true;
                }
                std::vector<Pose> neighbor_poses;
                neighbor_poses.reserve(neighbors.size());
                for (const AgentState* n : neighbors) {
                    neighbor_poses.push_back({{n->pose.x, n->pose.y}, n->pose.z});
                }
                const GradientResult grad =
                    local_gradient(Pose{{agent.pose.x, agent.pose.y}, agent.pose.z},
                                   neighbor_poses, agent.params.cam, sensed.samples);
                const Pose pd = update_desired(
                    Pose{{next.desired.x, next.desired.y}, next.desired.z}, grad,
                    agent.params.ctrl);
                next.desired = {pd.lateral.x, pd.lateral.y, pd.altitude};
            }
        } else {
            next.zeta = 0; // grounded agents sense nothing
        }

        std::vector<Vec3> neighbor_positions;
        neighbor_positions.reserve(neighbors.size());
        for (const AgentState* n : neighbors) neighbor_positions.push_back(n->pose);

        const Vec3 u = control(agent.pose, next.desired, next.zeta, neighbor_positions,
                               agent.params.safety, agent.params.attract, agent.launched);
        next.pose = integrate(agent.pose, u, agent.params.attract.dt);
        if (next.pose.z >= agent.params.safety.min_altitude) next.launched = true;
    } catch (const std::domain_error&) {
        // Singular configuration: hold the pose and flag the step.
        next.pose = agent.pose;
        next.aborted = true;
    }
    return next;
}

namespace {

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace

void world_step(WorldState& world) {
    // Immutable pose snapshot: neighbor sets and every agent_step read from
    // `before`, results commit at the step barrier.
    const std::vector<AgentState> before = world.agents;
    const int n = static_cast<int>(before.size());

    std::vector<AgentState> after(before.size());
    parallel_for(n, world.threads, [&](int i) {
        std::vector<const AgentState*> neighbors;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (distance(before[static_cast<std::size_t>(j)].pose,
                         before[static_cast<std::size_t>(i)].pose) <= world.comm_radius) {
                neighbors.push_back(&before[static_cast<std::size_t>(j)]);
            }
        }
        after[static_cast<std::size_t>(i)] =
            agent_step(before[static_cast<std::size_t>(i)], neighbors, world.snapshot);
    });

    world.agents = std::move(after);
    ++world.step;

    if (world.fire_step_every > 0 && world.step % world.fire_step_every == 0) {
        step_fire(world.fire, world.fire_rng, world.fire_opts);
        refresh_fire_snapshot(world);
    }
}

} // namespace wildfire
