#pragma once

#include <span>
#include <stdexcept>

#include "wildfire/geom.hpp"

namespace wildfire {

struct SafetyParams {
    double safe_distance = 10.0;  // d
    double min_altitude = 15.0;   // z_min
    double neighbor_gain = 2.1;   // nu
    double ground_gain = 1e3;     // nu'
};

struct AttractGains {
    double rendezvous_gain = 0.06; // k_r
    double desired_gain = 0.06;    // k_d
    Vec3 rendezvous;               // p_r
    double dt = 1.0;
};

/// Raised when a repulsion kernel is evaluated at zero separation.
struct SingularRepulsion : std::domain_error {
    using std::domain_error::domain_error;
};

/// Quadratic-potential attraction toward `to`.
Vec3 attract(const Vec3& to, const Vec3& from, double gain);

/// Sum of short-range repulsions from neighbors closer than the safe
/// distance. Each active contribution points away from the neighbor and
/// grows without bound as the separation closes. Throws SingularRepulsion
/// on coincident poses.
Vec3 repulse_neighbors(const Vec3& self, std::span<const Vec3> neighbors,
                       const SafetyParams& safety);

/// Same kernel against the agent's ground image; purely vertical, active
/// only below the safe altitude. Throws SingularRepulsion at zero altitude.
Vec3 repulse_ground(const Vec3& self, const SafetyParams& safety);

/// Full potential-field control law: repulsions plus the phase switch
/// between rendezvous attraction (zeta = 0) and desired-position tracking
/// (zeta = 1). An agent still on the ground (z = 0) gets no ground term.
/// `launched` is false during take-off (before the agent first clears the
/// safe altitude); the ground term stays off in that phase, since a whole
/// Euler step landing deep inside the stiff 1/z^2 zone would otherwise
/// catapult the agent thousands of units up.
Vec3 control(const Vec3& self, const Vec3& desired, int zeta,
             std::span<const Vec3> neighbors, const SafetyParams& safety,
             const AttractGains& gains, bool launched = true);

/// Euler step; altitude floored at ground level.
Vec3 integrate(const Vec3& pose, const Vec3& velocity, double dt);

} // namespace wildfire
