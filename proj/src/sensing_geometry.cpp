#include "wildfire/sensing_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wildfire {

FovRect fov_rect(const Pose& pose, const CameraIntrinsics& cam) {
    if (pose.altitude <= 0.0) {
        throw std::domain_error("fov_rect: degenerate FOV at zero altitude");
    }
    return {pose.lateral,
            {pose.altitude * std::tan(cam.half_angle_x),
             pose.altitude * std::tan(cam.half_angle_y)}};
}

bool contains(const Pose& pose, const CameraIntrinsics& cam, const Vec2& q) {
    const double hx = pose.altitude * std::tan(cam.half_angle_x);
    const double hy = pose.altitude * std::tan(cam.half_angle_y);
    return std::abs(q.x - pose.lateral.x) <= hx && std::abs(q.y - pose.lateral.y) <= hy;
}

double pixel_cost(const Pose& pose, const CameraIntrinsics& cam) {
    const double b = cam.focal_length;
    const double d = b - pose.altitude;
    return cam.pixel_area / (b * b) * d * d;
}

double joint_cost(const Vec2& /*q*/, std::span<const Pose> covering, const CameraIntrinsics& cam) {
    // Canonical (sorted) summation order: the result is invariant under any
    // permutation of the covering set, which the runtime relies on.
    double inv[64];
    std::size_t n = 0;
    double overflow = 0.0;
    for (const Pose& p : covering) {
        const double c = pixel_cost(p, cam);
        const double v = 1.0 / c;
        if (n < 64) {
            inv[n++] = v;
        } else {
            overflow += v; // > 64 covering cameras; keep input order for the rest
        }
    }
    std::sort(inv, inv + n);
    double sum = cam.regularizer;
    for (std::size_t i = 0; i < n; ++i) sum += inv[i];
    sum += overflow;
    return 1.0 / sum;
}

double importance(double intensity, const CameraIntrinsics& cam) {
    if (cam.uniform_importance) return cam.importance_gain;
    const double clamped = std::clamp(intensity, cam.intensity_min, cam.intensity_max);
    return cam.importance_gain * (cam.intensity_max - clamped);
}

DiscretizedFov discretize_fov(const FovRect& rect, int target_cells, int edge_points) {
    if (target_cells < 4) {
        throw std::invalid_argument("discretize_fov: need at least 4 interior cells");
    }
    const double w = 2.0 * rect.half_extent.x;
    const double h = 2.0 * rect.half_extent.y;
    const double aspect = w / h;
    int nx = std::max(2, static_cast<int>(std::lround(std::sqrt(target_cells * aspect))));
    int ny = std::max(2, static_cast<int>(std::lround(std::sqrt(target_cells / aspect))));
    if (edge_points <= 0) {
        edge_points = std::max(2, 2 * static_cast<int>(std::lround(std::sqrt(double(target_cells)))));
    }

    DiscretizedFov out;
    out.interior.reserve(static_cast<std::size_t>(nx) * ny);
    const double cw = w / nx;
    const double ch = h / ny;
    const double x0 = rect.center.x - rect.half_extent.x;
    const double y0 = rect.center.y - rect.half_extent.y;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            out.interior.push_back({{x0 + (i + 0.5) * cw, y0 + (j + 0.5) * ch}, cw * ch});
        }
    }

    // Edge k spans the side whose outward normal is edge_normals[k].
    const auto fill_edge = [&](int k, Vec2 a, Vec2 b) {
        const double len = (b - a).norm();
        const double dq = len / edge_points;
        auto& e = out.edges[static_cast<std::size_t>(k)];
        e.reserve(static_cast<std::size_t>(edge_points));
        for (int i = 0; i < edge_points; ++i) {
            const double t = (i + 0.5) / edge_points;
            e.push_back({{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}, dq});
        }
    };
    const double x1 = rect.center.x + rect.half_extent.x;
    const double y1 = rect.center.y + rect.half_extent.y;
    fill_edge(0, {x1, y0}, {x1, y1});
    fill_edge(1, {x0, y1}, {x1, y1});
    fill_edge(2, {x0, y0}, {x0, y1});
    fill_edge(3, {x0, y0}, {x1, y0});
    return out;
}

} // namespace wildfire
