#include "wildfire/potential_field.hpp"

#include <algorithm>

namespace wildfire {

Vec3 attract(const Vec3& to, const Vec3& from, double gain) {
    return (from - to) * -gain;
}

Vec3 repulse_neighbors(const Vec3& self, std::span<const Vec3> neighbors,
                       const SafetyParams& safety) {
    Vec3 force;
    for (const Vec3& other : neighbors) {
        const Vec3 delta = self - other;
        const double dist = delta.norm();
        if (dist >= safety.safe_distance) continue;
        if (dist <= 0.0) {
            throw SingularRepulsion("repulse_neighbors: coincident poses");
        }
        const double mag = safety.neighbor_gain *
                           (1.0 / dist - 1.0 / safety.safe_distance) / (dist * dist * dist);
        force += delta * mag;
    }
    return force;
}

Vec3 repulse_ground(const Vec3& self, const SafetyParams& safety) {
    const double z = self.z;
    if (z <= 0.0) {
        throw SingularRepulsion("repulse_ground: zero altitude");
    }
    if (z >= safety.min_altitude) return {};
    const double mag =
        safety.ground_gain * (1.0 / z - 1.0 / safety.min_altitude) / (z * z * z);
    return {0.0, 0.0, mag * z};
}

Vec3 control(const Vec3& self, const Vec3& desired, int zeta,
             std::span<const Vec3> neighbors, const SafetyParams& safety,
             const AttractGains& gains, bool launched) {
    Vec3 u = repulse_neighbors(self, neighbors, safety);
    if (launched && self.z > 0.0) {
        u += repulse_ground(self, safety);
    }
    if (zeta == 0) {
        u += attract(gains.rendezvous, self, gains.rendezvous_gain);
    } else {
        u += attract(desired, self, gains.desired_gain);
    }
    return u;
}

Vec3 integrate(const Vec3& pose, const Vec3& velocity, double dt) {
    Vec3 next = pose + velocity * dt;
    next.z = std::max(next.z, 0.0);
    return next;
}

} // namespace wildfire
