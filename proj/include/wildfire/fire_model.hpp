#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wildfire/geom.hpp"
#include "wildfire/rng.hpp"

namespace wildfire {

/// Stochastic wind. Direction is an azimuth measured from the +y axis,
/// clockwise positive; speed is mid-flame wind speed in mph.
struct WindModel {
    double mean_direction = 0.0;
    double std_direction = 0.0;
    double mean_speed = 0.0;
    double std_speed = 0.0;
};

/// One heat source. Active sources still spawn new front points; inactive
/// ones only contribute heat.
struct FireFrontSource {
    Vec2 position;
    Vec2 sigma{1.0, 1.0};
    bool active = true;
};

struct SpreadParams {
    double rate = 1.0; // steady-state rate of spread, field units per time
    double dt = 1.0;   // fire time step
};

struct FireState {
    std::vector<FireFrontSource> sources;
    WindModel wind;
    SpreadParams spread;
    long time = 0;
};

struct FireStepOptions {
    /// A spawn landing closer than this to any existing source is suppressed
    /// and its parent stops spawning. Zero disables suppression.
    double min_front_separation = 5.0;
    /// Draw one (direction, speed) pair per step instead of per source.
    bool wind_shared = false;
};

/// Draws (direction, speed); direction reduced into [0, 2pi), speed clamped
/// to be non-negative.
std::pair<double, double> sample_wind(const WindModel& wind, Rng& rng);

/// Front-center drift per unit time for the given wind, (east, north)
/// components. Throws std::domain_error if the length/breadth ratio drops
/// below 1, which cannot happen for speed >= 0.
Vec2 elliptical_offset(double speed, double direction, const SpreadParams& spread);

/// Advances the front one step: every active source spawns a child at its
/// drifted position, subject to the separation rule in `opts`.
void step_fire(FireState& state, Rng& rng, const FireStepOptions& opts = {});

/// Heat intensity at q: sum of the Gaussian aura of every source, active or
/// not. Exact; see FireSnapshot for the accelerated query used in the loop.
double intensity_at(const FireState& state, const Vec2& q);

struct IntensityRaster {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    double resolution = 1.0;
    int nx = 0, ny = 0;
    std::vector<double> values; // row-major, north row first

    double at(int row, int col) const { return values[static_cast<size_t>(row) * nx + col]; }
};

struct Extent {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
};

/// Samples intensity_at on cell centers. Throws std::invalid_argument on a
/// degenerate extent or non-positive resolution.
IntensityRaster intensity_grid(const FireState& state, const Extent& extent, double resolution);

/// Immutable read view of a FireState with a bucket index over sources.
/// With cutoff_sigmas > 0 a source further than cutoff_sigmas standard
/// deviations from q (per axis) is skipped; its contribution is below
/// exp(-cutoff^2/2) of its peak. cutoff_sigmas = 0 reproduces intensity_at
/// exactly.
class FireSnapshot {
public:
    FireSnapshot() = default;
    explicit FireSnapshot(const FireState& state, double cutoff_sigmas = 0.0);

    double intensity(const Vec2& q) const;
    long time() const { return time_; }
    const std::vector<FireFrontSource>& sources() const { return sources_; }

private:
    std::vector<FireFrontSource> sources_;
    long time_ = 0;
    double cutoff_sigmas_ = 0.0;

    // uniform grid index
    double cell_ = 0.0;
    double x0_ = 0.0, y0_ = 0.0;
    int nx_ = 0, ny_ = 0;
    std::vector<std::vector<std::uint32_t>> buckets_;
};

} // namespace wildfire
