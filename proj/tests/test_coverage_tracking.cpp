#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wildfire/coverage_tracking.hpp"

using namespace wildfire;

namespace {

CameraIntrinsics table_cam() {
    CameraIntrinsics cam;
    cam.half_angle_x = M_PI / 6.0;
    cam.half_angle_y = M_PI / 4.0;
    return cam;
}

// compact source cluster, comfortably above the detection floor near (64, 64)
FireSnapshot test_fire() {
    FireState fire;
    for (double x : {56.0, 64.0, 72.0}) {
        for (double y : {56.0, 64.0, 72.0}) {
            fire.sources.push_back({{x, y}, {6, 6}, true});
        }
    }
    return FireSnapshot(fire);
}

} // namespace

TEST_CASE("fov sampling flags fire when any sample clears the floor") {
    const CameraIntrinsics cam = table_cam();
    const FireSnapshot fire = test_fire();
    const FovDiscretization disc{256, 16};

    const FovIntensities over = sample_fov_intensity({{64, 60}, 25.0}, cam, fire, disc);
    CHECK(over.any_fire);
    const FovIntensities away = sample_fov_intensity({{300, 300}, 25.0}, cam, fire, disc);
    CHECK_FALSE(away.any_fire);
    CHECK(away.interior.size() == away.fov.interior.size());
}

TEST_CASE("covering an uncovered fire lowers the objective") {
    const CameraIntrinsics cam = table_cam();
    const FireSnapshot fire = test_fire();
    const GridSpec grid{0, 0, 128, 128, 64, 64};

    const double empty = objective_H({}, fire, cam, grid);
    const std::vector<Pose> covering{{{64, 60}, 40.0}};
    const std::vector<Pose> elsewhere{{{300, 300}, 40.0}};
    CHECK(empty > 0.0);
    CHECK(objective_H(covering, fire, cam, grid) < 0.01 * empty);
    CHECK(objective_H(elsewhere, fire, cam, grid) == doctest::Approx(empty).epsilon(1e-12));
}

TEST_CASE("objective agrees with its cached form") {
    const CameraIntrinsics cam = table_cam();
    const FireSnapshot fire = test_fire();
    const GridSpec grid{0, 0, 128, 128, 32, 32};
    std::vector<double> cells;
    grid_intensities(fire, grid, cells);
    REQUIRE(cells.size() == 32 * 32);

    const std::vector<Pose> poses{{{64, 60}, 30.0}, {{80, 60}, 45.0}};
    CHECK(objective_H(poses, fire, cam, grid) == objective_H_cached(poses, cells, cam, grid));
}

TEST_CASE("gradient matches central finite differences of the objective") {
    // The discretized objective is a staircase in the lateral coordinates
    // (the joint cost itself depends only on altitude), so the grid cell
    // must equal the 2*eps central-difference window, and square half-angles
    // keep the vertical sweep aligned with the cells too.
    CameraIntrinsics cam;
    cam.half_angle_x = M_PI / 4.0;
    cam.half_angle_y = M_PI / 4.0;
    FireState blob;
    blob.sources.push_back({{10, 12}, {3, 3}, true});
    blob.sources.push_back({{16, 14}, {3, 3}, true});
    const FireSnapshot fire(blob);
    const GridSpec grid{0, 0, 25.6, 25.6, 128, 128};
    const FovDiscretization disc{4096, 256};
    const double eps = 0.1;

    const Pose self{{9, 10}, 6.0};
    const std::vector<Pose> none;

    const GradientResult g = local_gradient(self, none, fire, cam, disc);

    const auto H = [&](double dx, double dy, double dz) {
        const std::vector<Pose> p{{{self.lateral.x + dx, self.lateral.y + dy},
                                   self.altitude + dz}};
        return objective_H(p, fire, cam, grid);
    };
    const double fx = (H(eps, 0, 0) - H(-eps, 0, 0)) / (2 * eps);
    const double fy = (H(0, eps, 0) - H(0, -eps, 0)) / (2 * eps);
    const double fz = (H(0, 0, eps) - H(0, 0, -eps)) / (2 * eps);

    CHECK(g.d_lateral.x == doctest::Approx(fx).epsilon(0.05));
    CHECK(g.d_lateral.y == doctest::Approx(fy).epsilon(0.05));
    CHECK(g.d_vertical == doctest::Approx(fz).epsilon(0.05));
}

TEST_CASE("mirrored configurations give mirrored gradients") {
    const CameraIntrinsics cam = table_cam();
    FireState fire;
    fire.sources.push_back({{90, 100}, {8, 8}, true});
    fire.sources.push_back({{110, 100}, {8, 8}, true});
    const FireSnapshot snap(fire);
    const FovDiscretization disc{1024, 64};

    const Pose left{{85, 100}, 22.0};
    const Pose right{{115, 100}, 22.0};
    const GradientResult gl = local_gradient(left, {{right}}, snap, cam, disc);
    const GradientResult gr = local_gradient(right, {{left}}, snap, cam, disc);

    CHECK(gl.d_lateral.x == doctest::Approx(-gr.d_lateral.x).epsilon(1e-9));
    CHECK(gl.d_lateral.y == doctest::Approx(gr.d_lateral.y).epsilon(1e-9));
    CHECK(gl.d_vertical == doctest::Approx(gr.d_vertical).epsilon(1e-9));
}

TEST_CASE("a covering neighbor mutes the boundary pull") {
    const CameraIntrinsics cam = table_cam();
    const FireSnapshot fire = test_fire();
    const FovDiscretization disc{1024, 64};
    const Pose self{{58, 55}, 24.0};
    // neighbor high above the same spot covers every point the self does
    const std::vector<Pose> blanket{{{64, 60}, 90.0}};

    const GradientResult alone = local_gradient(self, {}, fire, cam, disc);
    const GradientResult shared = local_gradient(self, blanket, fire, cam, disc);
    CHECK(shared.d_lateral.norm() < 0.01 * alone.d_lateral.norm());
}

TEST_CASE("desired position descends against the gradient") {
    ControllerGains gains{0.5, 0.25, 2.0, 0.0};
    const GradientResult grad{{3.0, -1.0}, 4.0};
    const Pose next = update_desired({{10, 10}, 30.0}, grad, gains);
    CHECK(next.lateral.x == doctest::Approx(10.0 - 0.5 * 2.0 * 3.0));
    CHECK(next.lateral.y == doctest::Approx(10.0 + 0.5 * 2.0 * 1.0));
    CHECK(next.altitude == doctest::Approx(30.0 - 0.25 * 2.0 * 4.0));
}

TEST_CASE("gradient clipping caps the 3D norm") {
    ControllerGains gains{1.0, 1.0, 1.0, 5.0};
    const GradientResult grad{{30.0, 0.0}, 40.0}; // norm 50, clipped to 5
    const Pose next = update_desired({{0, 0}, 0.0}, grad, gains);
    CHECK(next.lateral.x == doctest::Approx(-3.0));
    CHECK(next.altitude == doctest::Approx(-4.0));
}

TEST_CASE("gradient at the focus altitude is rejected over fire") {
    const CameraIntrinsics cam = table_cam();
    const FireSnapshot fire = test_fire();
    CHECK_THROWS_AS(local_gradient({{64, 60}, cam.focal_length}, {}, fire, cam, {256, 16}),
                    std::domain_error);
}
