#pragma once

#include <string>

#include "wildfire/coverage_tracking.hpp"
#include "wildfire/swarm_runtime.hpp"

namespace wildfire {

/// Renders one frame: grayscale intensity heat layer, an FOV rectangle and
/// labelled marker per airborne agent, and dashed links between physical
/// neighbors. World +y maps to screen up.
std::string render_svg(const WorldState& world, const GridSpec& grid);

} // namespace wildfire
