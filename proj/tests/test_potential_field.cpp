#include <doctest.h>

#include <vector>

#include "wildfire/potential_field.hpp"

using namespace wildfire;

TEST_CASE("attraction is a negative gradient of a quadratic well") {
    CHECK(attract({5, 5, 5}, {5, 5, 5}, 0.06).norm() == 0.0);
    const Vec3 f = attract({0, 0, 0}, {10, 0, 0}, 0.06);
    CHECK(f.x == doctest::Approx(-0.6));
    CHECK(f.y == 0.0);
    CHECK(f.z == 0.0);
}

TEST_CASE("neighbor repulsion magnitude and direction") {
    const SafetyParams safety; // d = 10, nu = 2.1
    const std::vector<Vec3> east{{5, 0, 0}};
    const Vec3 f = repulse_neighbors({0, 0, 0}, east, safety);
    CHECK(f.x == doctest::Approx(-8.4e-3).epsilon(1e-12)); // pushed west
    CHECK(f.y == 0.0);
    CHECK(f.z == 0.0);
}

TEST_CASE("repulsion gate is exact at the safe distance") {
    const SafetyParams safety;
    const std::vector<Vec3> at{{10, 0, 0}};
    const std::vector<Vec3> just_in{{10.0 - 1e-9, 0, 0}};
    CHECK(repulse_neighbors({0, 0, 0}, at, safety).norm() == 0.0);
    CHECK(repulse_neighbors({0, 0, 0}, just_in, safety).x < 0.0);
}

TEST_CASE("repulsion diverges as separation closes") {
    const SafetyParams safety;
    double prev = 0.0;
    for (double dist = 5.0; dist > 1e-3; dist /= 2.0) {
        const std::vector<Vec3> n{{dist, 0, 0}};
        const double mag = repulse_neighbors({0, 0, 0}, n, safety).norm();
        CHECK(mag > prev);
        prev = mag;
    }
    CHECK(prev > 1e6);
}

TEST_CASE("coincident poses are singular") {
    const SafetyParams safety;
    const std::vector<Vec3> self_copy{{1, 2, 3}};
    CHECK_THROWS_AS(repulse_neighbors({1, 2, 3}, self_copy, safety), SingularRepulsion);
}

TEST_CASE("ground repulsion is vertical with the documented magnitude") {
    const SafetyParams safety; // z_min = 15, nu' = 1e3
    const Vec3 f = repulse_ground({40, 50, 10}, safety);
    CHECK(f.x == 0.0);
    CHECK(f.y == 0.0);
    CHECK(f.z == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(repulse_ground({0, 0, 15.0}, safety).norm() == 0.0);
    CHECK(repulse_ground({0, 0, 80.0}, safety).norm() == 0.0);
    CHECK_THROWS_AS(repulse_ground({0, 0, 0.0}, safety), SingularRepulsion);
}

TEST_CASE("the phase switch selects exactly one attractor") {
    const SafetyParams safety;
    AttractGains gains{0.06, 0.05, {500, 500, 60}, 1.0};
    const Vec3 self{400, 500, 60};
    const Vec3 desired{420, 500, 60};

    const Vec3 u0 = control(self, desired, 0, {}, safety, gains);
    CHECK(u0.x == doctest::Approx(0.06 * 100.0));

    // with zeta = 1 the rendezvous point is irrelevant, bit-exact
    const Vec3 u1 = control(self, desired, 1, {}, safety, gains);
    AttractGains moved = gains;
    moved.rendezvous = {-900, 123, 4};
    const Vec3 u1b = control(self, desired, 1, {}, safety, moved);
    CHECK(u1.x == doctest::Approx(0.05 * 20.0));
    CHECK(u1.x == u1b.x);
    CHECK(u1.y == u1b.y);
    CHECK(u1.z == u1b.z);
}

TEST_CASE("rendezvous point is an equilibrium") {
    const SafetyParams safety;
    AttractGains gains{0.06, 0.06, {500, 500, 60}, 1.0};
    CHECK(control(gains.rendezvous, {0, 0, 0}, 0, {}, safety, gains).norm() == 0.0);
}

TEST_CASE("grounded and pre-launch agents get no ground kick") {
    const SafetyParams safety;
    AttractGains gains{0.06, 0.06, {500, 500, 60}, 1.0};
    const Vec3 grounded = control({500, 500, 0}, {0, 0, 0}, 0, {}, safety, gains);
    CHECK(grounded.z == doctest::Approx(3.6));
    // below z_min but not launched yet: still pure attraction
    const Vec3 rising = control({500, 500, 2}, {0, 0, 0}, 0, {}, safety, gains, false);
    CHECK(rising.z == doctest::Approx(0.06 * 58.0));
    // once launched, the same altitude draws the full repulsion
    const Vec3 launched = control({500, 500, 2}, {0, 0, 0}, 0, {}, safety, gains, true);
    CHECK(launched.z > rising.z + 100.0);
}

TEST_CASE("integration is a plain Euler step floored at the ground") {
    const Vec3 p = integrate({1, 2, 3}, {1, 2, 3}, 0.5);
    CHECK(p.x == doctest::Approx(1.5));
    CHECK(p.y == doctest::Approx(3.0));
    CHECK(p.z == doctest::Approx(4.5));
    CHECK(integrate({0, 0, 1}, {0, 0, -5}, 1.0).z == 0.0);
}

TEST_CASE("phase-1 distance to the rendezvous contracts strictly") {
    const SafetyParams safety;
    AttractGains gains{0.06, 0.06, {500, 500, 60}, 1.0};
    Vec3 p{300, 320, 0};
    double dist = (p - gains.rendezvous).norm();
    for (int t = 0; t < 300; ++t) {
        p = integrate(p, control(p, {0, 0, 0}, 0, {}, safety, gains, false), gains.dt);
        const double next = (p - gains.rendezvous).norm();
        CHECK(next < dist);
        dist = next;
    }
    CHECK(dist < 1.0);
}
