#pragma once

#include <array>
#include <span>
#include <vector>

#include "wildfire/fire_model.hpp"
#include "wildfire/sensing_geometry.hpp"

namespace wildfire {

struct ControllerGains {
    double lateral_gain = 1e-9;  // k_c
    double vertical_gain = 2e-10; // k_z
    double dt = 1.0;
    double gradient_clip = 0.0;  // 0 disables clipping
};

struct GradientResult {
    Vec2 d_lateral;        // dH/dc_i
    double d_vertical = 0; // dH/dz_i
};

struct FovDiscretization {
    int interior_cells = 1024; // ~32x32
    int edge_points = 64;      // per edge
};

struct GridSpec {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    int nx = 0, ny = 0;
    double cell_area() const { return (xmax - xmin) / nx * ((ymax - ymin) / ny); }
};

/// Discretized FOV plus the heat intensity read at every sample point.
/// Computed once per agent per step; both the zeta switch and the gradient
/// consume it.
struct FovIntensities {
    DiscretizedFov fov;
    std::vector<double> interior;
    std::array<std::vector<double>, 4> edges;
    bool any_fire = false; // any sample above the camera's detection floor
};

FovIntensities sample_fov_intensity(const Pose& self, const CameraIntrinsics& cam,
                                    const FireSnapshot& fire, const FovDiscretization& disc);

/// Decentralized coverage gradient. `sensing_neighbors` must be exactly the
/// poses an agent may legally read (its physical neighbors); membership of a
/// sample point in each neighbor's FOV is tested per point.
GradientResult local_gradient(const Pose& self, std::span<const Pose> sensing_neighbors,
                              const CameraIntrinsics& cam, const FovIntensities& sampled);

/// Convenience overload that samples the FOV itself.
GradientResult local_gradient(const Pose& self, std::span<const Pose> sensing_neighbors,
                              const FireSnapshot& fire, const CameraIntrinsics& cam,
                              const FovDiscretization& disc);

/// Global coverage objective, discretized over `grid`. Diagnostic only; the
/// per-agent controller never sees it.
double objective_H(std::span<const Pose> all_poses, const FireSnapshot& fire,
                   const CameraIntrinsics& cam, const GridSpec& grid);

/// Same sum with intensities precomputed at cell centers (row-major, ymin
/// row first), for callers that cache them between fire steps.
double objective_H_cached(std::span<const Pose> all_poses, std::span<const double> cell_intensity,
                          const CameraIntrinsics& cam, const GridSpec& grid);

/// Fills `out` (size nx*ny) with intensity at cell centers in the order
/// objective_H_cached expects.
void grid_intensities(const FireSnapshot& fire, const GridSpec& grid, std::vector<double>& out);

/// Gradient step on the desired virtual position.
Pose update_desired(const Pose& desired, const GradientResult& grad, const ControllerGains& gains);

} // namespace wildfire
