#pragma once

#include <array>
#include <span>
#include <vector>

#include "wildfire/geom.hpp"

namespace wildfire {

struct CameraIntrinsics {
    double focal_length = 10.0;   // b
    double pixel_area = 1e-4;     // S1
    double half_angle_x = 0.0;    // theta1, radians
    double half_angle_y = 0.0;    // theta2, radians
    double intensity_min = 0.005;
    double intensity_max = 0.1;
    double importance_gain = 1.0; // kappa
    double regularizer = 1.5e-5;  // m
    bool uniform_importance = false;
};

/// Agent pose: lateral ground position plus altitude.
struct Pose {
    Vec2 lateral;
    double altitude = 0.0;
};

/// Axis-aligned ground rectangle imaged by a downward camera. Edge k has
/// outward normal edge_normals[k]; edges are ordered +x, +y, -x, -y.
struct FovRect {
    Vec2 center;
    Vec2 half_extent;
};

inline constexpr std::array<Vec2, 4> edge_normals{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

struct FovSample {
    Vec2 q;
    double dq = 0.0; // cell area for interior samples, segment length for edges
};

struct DiscretizedFov {
    std::vector<FovSample> interior;
    std::array<std::vector<FovSample>, 4> edges;
};

/// Throws std::domain_error when altitude is zero (degenerate FOV).
FovRect fov_rect(const Pose& pose, const CameraIntrinsics& cam);

/// Closed-set membership: q on an edge counts as inside.
bool contains(const Pose& pose, const CameraIntrinsics& cam, const Vec2& q);

/// Ground area imaged by one pixel: (S1/b^2)(b - z)^2.
double pixel_cost(const Pose& pose, const CameraIntrinsics& cam);

/// Regularized harmonic combination of the covering cameras' pixel costs.
/// `covering` must hold exactly the poses whose FOV contains q; empty is
/// fine and yields 1/m. Summation order is canonicalized so permuting the
/// input never changes the result.
double joint_cost(const Vec2& q, std::span<const Pose> covering, const CameraIntrinsics& cam);

/// Importance weight of a point with heat intensity `intensity`: the gain
/// times the headroom to intensity_max, with readings clamped into the
/// camera's detection range. In uniform mode returns the gain itself.
double importance(double intensity, const CameraIntrinsics& cam);

/// Uniform grid over the rectangle interior (about target_cells cells) plus
/// evenly split edge segments. edge_points = 0 derives 2*sqrt(target_cells)
/// points per edge.
DiscretizedFov discretize_fov(const FovRect& rect, int target_cells, int edge_points = 0);

} // namespace wildfire
