#include "wildfire/fire_model.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace wildfire {

std::pair<double, double> sample_wind(const WindModel& wind, Rng& rng) {
    double theta = rng.gaussian(wind.mean_direction, wind.std_direction);
    theta = std::fmod(theta, 2.0 * M_PI);
    if (theta < 0.0) theta += 2.0 * M_PI;
    double speed = rng.gaussian(wind.mean_speed, wind.std_speed);
    if (speed < 0.0) speed = 0.0;
    return {theta, speed};
}

Vec2 elliptical_offset(double speed, double direction, const SpreadParams& spread) {
    const double lb = 0.936 * std::exp(0.2566 * speed) +
                      0.461 * std::exp(-0.1548 * speed) - 0.397;
    if (lb < 1.0 - 1e-12) {
        throw std::domain_error("elliptical_offset: length/breadth ratio below 1");
    }
    const double disc = lb * lb - 1.0;
    double c = 0.0;
    if (disc > 0.0) {
        const double root = std::sqrt(disc);
        const double hb = (lb + root) / (lb - root);
        c = (spread.rate - spread.rate / hb) / 2.0;
    }
    return {c * std::sin(direction), c * std::cos(direction)};
}

void step_fire(FireState& state, Rng& rng, const FireStepOptions& opts) {
    const std::size_t parent_count = state.sources.size();
    const double sep2 = opts.min_front_separation * opts.min_front_separation;

    double shared_theta = 0.0, shared_speed = 0.0;
    if (opts.wind_shared) {
        std::tie(shared_theta, shared_speed) = sample_wind(state.wind, rng);
    }

    for (std::size_t i = 0; i < parent_count; ++i) {
        if (!state.sources[i].active) continue;

        double theta = shared_theta, speed = shared_speed;
        if (!opts.wind_shared) {
            std::tie(theta, speed) = sample_wind(state.wind, rng);
        }
        const Vec2 offset = elliptical_offset(speed, theta, state.spread);
        const Vec2 child_pos = state.sources[i].position + offset * state.spread.dt;

        bool suppressed = false;
        if (opts.min_front_separation > 0.0) {
            for (const FireFrontSource& s : state.sources) {
                const Vec2 d = child_pos - s.position;
                if (d.x * d.x + d.y * d.y < sep2) {
                    suppressed = true;
                    break;
                }
            }
        }
        if (suppressed) {
            // Enclosed by existing fronts: keep radiating heat, stop spawning.
            state.sources[i].active = false;
        } else {
            state.sources.push_back({child_pos, state.sources[i].sigma, true});
        }
    }
    ++state.time;
}

namespace {

inline double source_intensity(const FireFrontSource& s, const Vec2& q) {
    const double dx = (q.x - s.position.x) / s.sigma.x;
    const double dy = (q.y - s.position.y) / s.sigma.y;
    return std::exp(-0.5 * (dx * dx + dy * dy)) /
           (2.0 * M_PI * s.sigma.x * s.sigma.y);
}

} // namespace

double intensity_at(const FireState& state, const Vec2& q) {
    double sum = 0.0;
    for (const FireFrontSource& s : state.sources) {
        sum += source_intensity(s, q);
    }
    return sum;
}

IntensityRaster intensity_grid(const FireState& state, const Extent& extent, double resolution) {
    if (resolution <= 0.0) {
        throw std::invalid_argument("intensity_grid: resolution must be positive");
    }
    if (extent.xmax <= extent.xmin || extent.ymax <= extent.ymin) {
        throw std::invalid_argument("intensity_grid: degenerate extent");
    }
    IntensityRaster r;
    r.xmin = extent.xmin;
    r.ymin = extent.ymin;
    r.xmax = extent.xmax;
    r.ymax = extent.ymax;
    r.resolution = resolution;
    r.nx = std::max(1, static_cast<int>(std::ceil((extent.xmax - extent.xmin) / resolution)));
    r.ny = std::max(1, static_cast<int>(std::ceil((extent.ymax - extent.ymin) / resolution)));
    r.values.resize(static_cast<std::size_t>(r.nx) * r.ny);
    for (int row = 0; row < r.ny; ++row) {
        const double y = extent.ymax - (row + 0.5) * resolution; // north row first
        for (int col = 0; col < r.nx; ++col) {
            const double x = extent.xmin + (col + 0.5) * resolution;
            r.values[static_cast<std::size_t>(row) * r.nx + col] = intensity_at(state, {x, y});
        }
    }
    return r;
}

FireSnapshot::FireSnapshot(const FireState& state, double cutoff_sigmas)
    : sources_(state.sources), time_(state.time), cutoff_sigmas_(cutoff_sigmas) {
    if (cutoff_sigmas_ <= 0.0 || sources_.empty()) return;

    double max_reach = 0.0;
    double xmin = sources_[0].position.x, xmax = xmin;
    double ymin = sources_[0].position.y, ymax = ymin;
    for (const FireFrontSource& s : sources_) {
        max_reach = std::max(max_reach, cutoff_sigmas_ * std::max(s.sigma.x, s.sigma.y));
        xmin = std::min(xmin, s.position.x);
        xmax = std::max(xmax, s.position.x);
        ymin = std::min(ymin, s.position.y);
        ymax = std::max(ymax, s.position.y);
    }
    cell_ = std::max(max_reach, 1e-6);
    x0_ = xmin;
    y0_ = ymin;
    nx_ = static_cast<int>((xmax - xmin) / cell_) + 1;
    ny_ = static_cast<int>((ymax - ymin) / cell_) + 1;
    buckets_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (std::uint32_t i = 0; i < sources_.size(); ++i) {
        const int cx = static_cast<int>((sources_[i].position.x - x0_) / cell_);
        const int cy = static_cast<int>((sources_[i].position.y - y0_) / cell_);
        buckets_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(i);
    }
}

double FireSnapshot::intensity(const Vec2& q) const {
    if (cutoff_sigmas_ <= 0.0 || sources_.empty()) {
        double sum = 0.0;
        for (const FireFrontSource& s : sources_) sum += source_intensity(s, q);
        return sum;
    }
    const int cx = static_cast<int>(std::floor((q.x - x0_) / cell_));
    const int cy = static_cast<int>(std::floor((q.y - y0_) / cell_));
    double sum = 0.0;
    for (int gy = cy - 1; gy <= cy + 1; ++gy) {
        if (gy < 0 || gy >= ny_) continue;
        for (int gx = cx - 1; gx <= cx + 1; ++gx) {
            if (gx < 0 || gx >= nx_) continue;
            for (std::uint32_t idx : buckets_[static_cast<std::size_t>(gy) * nx_ + gx]) {
                const FireFrontSource& s = sources_[idx];
                const double rx = std::abs(q.x - s.position.x);
                const double ry = std::abs(q.y - s.position.y);
                if (rx > cutoff_sigmas_ * s.sigma.x || ry > cutoff_sigmas_ * s.sigma.y) continue;
                sum += source_intensity(s, q);
            }
        }
    }
    return sum;
}

} // namespace wildfire
