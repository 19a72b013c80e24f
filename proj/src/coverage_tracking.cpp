#include "wildfire/coverage_tracking.hpp"

#include <cmath>
#include <stdexcept>

namespace wildfire {

FovIntensities sample_fov_intensity(const Pose& self, const CameraIntrinsics& cam,
                                    const FireSnapshot& fire, const FovDiscretization& disc) {
    FovIntensities out;
    out.fov = discretize_fov(fov_rect(self, cam), disc.interior_cells, disc.edge_points);
    out.interior.reserve(out.fov.interior.size());
    for (const FovSample& s : out.fov.interior) {
        const double I = fire.intensity(s.q);
        out.interior.push_back(I);
        out.any_fire |= I > cam.intensity_min;
    }
    for (int k = 0; k < 4; ++k) {
        auto& edge = out.edges[static_cast<std::size_t>(k)];
        edge.reserve(out.fov.edges[static_cast<std::size_t>(k)].size());
        for (const FovSample& s : out.fov.edges[static_cast<std::size_t>(k)]) {
            const double I = fire.intensity(s.q);
            edge.push_back(I);
            out.any_fire |= I > cam.intensity_min;
        }
    }
    return out;
}

namespace {

// f_{N_q} and f_{N_q \ i} at one sample point. `scratch` avoids reallocating
// the covering-pose buffer for every point.
struct JointCosts {
    double with_self;
    double without_self;
};

JointCosts joint_costs_at(const Vec2& q, const Pose& self, std::span<const Pose> neighbors,
                          const CameraIntrinsics& cam, std::vector<Pose>& scratch) {
    scratch.clear();
    for (const Pose& p : neighbors) {
        if (p.altitude > 0.0 && contains(p, cam, q)) scratch.push_back(p);
    }
    JointCosts jc;
    jc.without_self = joint_cost(q, scratch, cam);
    scratch.push_back(self);
    jc.with_self = joint_cost(q, scratch, cam);
    return jc;
}

} // namespace

GradientResult local_gradient(const Pose& self, std::span<const Pose> sensing_neighbors,
                              const CameraIntrinsics& cam, const FovIntensities& sampled) {
    GradientResult g;
    std::vector<Pose> scratch;
    scratch.reserve(sensing_neighbors.size() + 1);

    const double tan_axis[4] = {std::tan(cam.half_angle_x), std::tan(cam.half_angle_y),
                                std::tan(cam.half_angle_x), std::tan(cam.half_angle_y)};

    for (int k = 0; k < 4; ++k) {
        const auto& edge = sampled.fov.edges[static_cast<std::size_t>(k)];
        const auto& intensities = sampled.edges[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (intensities[i] <= cam.intensity_min) continue; // not on the fire
            const JointCosts jc = joint_costs_at(edge[i].q, self, sensing_neighbors, cam, scratch);
            const double w = (jc.with_self - jc.without_self) *
                             importance(intensities[i], cam) * edge[i].dq;
            g.d_lateral += edge_normals[static_cast<std::size_t>(k)] * w;
            // The FOV boundary grows outward with altitude on every side, so
            // the edge term enters with +tan(theta_axis) for all four edges.
            g.d_vertical += w * tan_axis[k];
        }
    }

    const double b = cam.focal_length;
    const double dz = b - self.altitude;
    for (std::size_t i = 0; i < sampled.fov.interior.size(); ++i) {
        if (sampled.interior[i] <= cam.intensity_min) continue;
        if (dz == 0.0) {
            throw std::domain_error("local_gradient: altitude equals focal length");
        }
        const JointCosts jc =
            joint_costs_at(sampled.fov.interior[i].q, self, sensing_neighbors, cam, scratch);
        const double denom = cam.pixel_area / (b * b) * dz * dz * dz;
        g.d_vertical -= 2.0 * jc.with_self * jc.with_self / denom *
                        importance(sampled.interior[i], cam) * sampled.fov.interior[i].dq;
    }
    return g;
}

GradientResult local_gradient(const Pose& self, std::span<const Pose> sensing_neighbors,
                              const FireSnapshot& fire, const CameraIntrinsics& cam,
                              const FovDiscretization& disc) {
    return local_gradient(self, sensing_neighbors, cam,
                          sample_fov_intensity(self, cam, fire, disc));
}

void grid_intensities(const FireSnapshot& fire, const GridSpec& grid, std::vector<double>& out) {
    out.clear();
    out.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
    const double dx = (grid.xmax - grid.xmin) / grid.nx;
    const double dy = (grid.ymax - grid.ymin) / grid.ny;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.ymin + (j + 0.5) * dy;
        for (int i = 0; i < grid.nx; ++i) {
            out.push_back(fire.intensity({grid.xmin + (i + 0.5) * dx, y}));
        }
    }
}

double objective_H_cached(std::span<const Pose> all_poses, std::span<const double> cell_intensity,
                          const CameraIntrinsics& cam, const GridSpec& grid) {
    const double dx = (grid.xmax - grid.xmin) / grid.nx;
    const double dy = (grid.ymax - grid.ymin) / grid.ny;
    const double area = dx * dy;
    std::vector<Pose> covering;
    covering.reserve(all_poses.size());
    double H = 0.0;
    std::size_t idx = 0;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.ymin + (j + 0.5) * dy;
        for (int i = 0; i < grid.nx; ++i, ++idx) {
            const double I = cell_intensity[idx];
            if (I <= cam.intensity_min) continue; // not part of the fire
            const Vec2 q{grid.xmin + (i + 0.5) * dx, y};
            covering.clear();
            for (const Pose& p : all_poses) {
                if (p.altitude > 0.0 && contains(p, cam, q)) covering.push_back(p);
            }
            H += joint_cost(q, covering, cam) * importance(I, cam) * area;
        }
    }
    return H;
}

double objective_H(std::span<const Pose> all_poses, const FireSnapshot& fire,
                   const CameraIntrinsics& cam, const GridSpec& grid) {
    std::vector<double> cells;
    grid_intensities(fire, grid, cells);
    return objective_H_cached(all_poses, cells, cam, grid);
}

Pose update_desired(const Pose& desired, const GradientResult& grad, const ControllerGains& gains) {
    Vec2 dl = grad.d_lateral;
    double dv = grad.d_vertical;
    if (gains.gradient_clip > 0.0) {
        const double mag = std::sqrt(dl.x * dl.x + dl.y * dl.y + dv * dv);
        if (mag > gains.gradient_clip) {
            const double s = gains.gradient_clip / mag;
            dl = dl * s;
            dv *= s;
        }
    }
    Pose next = desired;
    next.lateral = next.lateral - dl * (gains.lateral_gain * gains.dt);
    next.altitude -= gains.vertical_gain * dv * gains.dt;
    return next;
}

} // namespace wildfire
