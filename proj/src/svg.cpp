#include "wildfire/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>

namespace wildfire {

namespace {

constexpr int kImageSize = 800;
constexpr int kHeatCells = 120;

void appendf(std::string& s, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    s += buf;
}

} // namespace

std::string render_svg(const WorldState& world, const GridSpec& grid) {
    const double wx = grid.xmax - grid.xmin;
    const double wy = grid.ymax - grid.ymin;
    const double sx = kImageSize / wx;
    const double sy = kImageSize / wy;
    // world -> screen, +y up
    const auto px = [&](double x) { return (x - grid.xmin) * sx; };
    const auto py = [&](double y) { return (grid.ymax - y) * sy; };

    std::string svg;
    appendf(svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
            "viewBox=\"0 0 %d %d\">\n",
            kImageSize, kImageSize, kImageSize, kImageSize);
    appendf(svg, "<rect width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n", kImageSize,
            kImageSize);

    // heat layer: darker/redder = hotter, normalized to the frame's peak
    const double cw = wx / kHeatCells;
    const double ch = wy / kHeatCells;
    std::vector<double> heat(static_cast<std::size_t>(kHeatCells) * kHeatCells);
    double peak = 0.0;
    for (int j = 0; j < kHeatCells; ++j) {
        for (int i = 0; i < kHeatCells; ++i) {
            const double v = world.snapshot.intensity(
                {grid.xmin + (i + 0.5) * cw, grid.ymin + (j + 0.5) * ch});
            heat[static_cast<std::size_t>(j) * kHeatCells + i] = v;
            peak = std::max(peak, v);
        }
    }
    if (peak <= 0.0) peak = 1.0;
    const double cell_px = static_cast<double>(kImageSize) / kHeatCells;
    for (int j = 0; j < kHeatCells; ++j) {
        for (int i = 0; i < kHeatCells; ++i) {
            const double t = heat[static_cast<std::size_t>(j) * kHeatCells + i] / peak;
            if (t < 1e-3) continue;
            const int g = static_cast<int>(std::lround(235.0 * (1.0 - t)));
            appendf(svg,
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                    "fill=\"rgb(255,%d,%d)\"/>\n",
                    i * cell_px, (kHeatCells - 1 - j) * cell_px, cell_px + 0.5,
                    cell_px + 0.5, 20 + g, g);
        }
    }

    // dashed links between physical neighbors
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        for (std::size_t j = i + 1; j < world.agents.size(); ++j) {
            if (distance(world.agents[i].pose, world.agents[j].pose) > world.comm_radius)
                continue;
            appendf(svg,
                    "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                    "stroke=\"#4477cc\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n",
                    px(world.agents[i].pose.x), py(world.agents[i].pose.y),
                    px(world.agents[j].pose.x), py(world.agents[j].pose.y));
        }
    }

    // FOV rectangles and markers
    for (const AgentState& a : world.agents) {
        if (a.pose.z > 0.0) {
            const double hx = a.pose.z * std::tan(a.params.cam.half_angle_x);
            const double hy = a.pose.z * std::tan(a.params.cam.half_angle_y);
            appendf(svg,
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                    "fill=\"none\" stroke=\"#228833\" stroke-width=\"1.5\"/>\n",
                    px(a.pose.x - hx), py(a.pose.y + hy), 2.0 * hx * sx, 2.0 * hy * sy);
        }
        appendf(svg,
                "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"4\" fill=\"#222222\"/>\n"
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                "font-family=\"sans-serif\" fill=\"#222222\">%d</text>\n",
                px(a.pose.x), py(a.pose.y), px(a.pose.x) + 6.0, py(a.pose.y) - 6.0, a.id);
    }

    appendf(svg, "<text x=\"8\" y=\"%d\" font-size=\"13\" font-family=\"sans-serif\" "
                 "fill=\"#555555\">step %ld</text>\n",
            kImageSize - 10, world.step);
    svg += "</svg>\n";
    return svg;
}

} // namespace wildfire
