#pragma once

#include <string>

#include "wildfire/config.hpp"
#include "wildfire/metrics.hpp"

namespace wildfire {

/// 9-significant-digit decimal used by every CSV artifact.
std::string fmt9(double v);

/// CSV raster of the current intensity field: one header row with the
/// extent and resolution, then nx-wide rows of intensities, north row first.
void write_intensity_csv(const FireSnapshot& fire, const GridSpec& grid,
                         const std::string& path);

/// JSON world snapshot: agents, fire sources, comm radius, camera, extent.
/// Self-contained, so `render` can rebuild the overlay from the file alone.
void write_world_json(const WorldState& world, const GridSpec& grid,
                      const std::string& path);

/// Rebuilds a renderable world (plus its extent) from a JSON snapshot.
/// Throws std::runtime_error on malformed input.
WorldState read_world_json(const std::string& path, GridSpec& grid_out);

} // namespace wildfire
