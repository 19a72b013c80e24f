#include "wildfire/snapshot_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace wildfire {

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_intensity_csv(const FireSnapshot& fire, const GridSpec& grid,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);

    const double resolution = (grid.xmax - grid.xmin) / grid.nx;
    out << fmt9(grid.xmin) << ',' << fmt9(grid.ymin) << ',' << fmt9(grid.xmax) << ','
        << fmt9(grid.ymax) << ',' << fmt9(resolution) << ',' << grid.nx << ',' << grid.ny
        << '\n';

    const double dx = (grid.xmax - grid.xmin) / grid.nx;
    const double dy = (grid.ymax - grid.ymin) / grid.ny;
    for (int j = grid.ny - 1; j >= 0; --j) { // north row first
        const double y = grid.ymin + (j + 0.5) * dy;
        for (int i = 0; i < grid.nx; ++i) {
            if (i) out << ',';
            out << fmt9(fire.intensity({grid.xmin + (i + 0.5) * dx, y}));
        }
        out << '\n';
    }
}

void write_world_json(const WorldState& world, const GridSpec& grid,
                      const std::string& path) {
    nlohmann::json j;
    j["step"] = world.step;
    j["comm_radius"] = world.comm_radius;
    j["extent"] = {{"xmin", grid.xmin}, {"ymin", grid.ymin},
                   {"xmax", grid.xmax}, {"ymax", grid.ymax}};

    nlohmann::json agents = nlohmann::json::array();
    for (const AgentState& a : world.agents) {
        agents.push_back({{"id", a.id},
                          {"x", a.pose.x},
                          {"y", a.pose.y},
                          {"z", a.pose.z},
                          {"zeta", a.zeta},
                          {"desired_x", a.desired.x},
                          {"desired_y", a.desired.y},
                          {"desired_z", a.desired.z},
                          {"half_angle_x", a.params.cam.half_angle_x},
                          {"half_angle_y", a.params.cam.half_angle_y}});
    }
    j["agents"] = std::move(agents);

    nlohmann::json sources = nlohmann::json::array();
    for (const FireFrontSource& s : world.fire.sources) {
        sources.push_back({s.position.x, s.position.y, s.sigma.x, s.sigma.y, s.active});
    }
    j["fire"] = {{"time", world.fire.time}, {"sources", std::move(sources)}};

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << j.dump(1) << '\n';
}

WorldState read_world_json(const std::string& path, GridSpec& grid_out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }

    WorldState world;
    try {
        world.step = j.at("step").get<long>();
        world.comm_radius = j.at("comm_radius").get<double>();
        const auto& e = j.at("extent");
        grid_out.xmin = e.at("xmin").get<double>();
        grid_out.ymin = e.at("ymin").get<double>();
        grid_out.xmax = e.at("xmax").get<double>();
        grid_out.ymax = e.at("ymax").get<double>();
        if (grid_out.nx <= 0) grid_out.nx = 128;
        if (grid_out.ny <= 0) grid_out.ny = 128;

        for (const auto& ja : j.at("agents")) {
            AgentState a;
            a.id = ja.at("id").get<int>();
            a.pose = {ja.at("x").get<double>(), ja.at("y").get<double>(),
                      ja.at("z").get<double>()};
            a.zeta = ja.at("zeta").get<int>();
            a.desired = {ja.at("desired_x").get<double>(), ja.at("desired_y").get<double>(),
                         ja.at("desired_z").get<double>()};
            a.params.cam.half_angle_x = ja.at("half_angle_x").get<double>();
            a.params.cam.half_angle_y = ja.at("half_angle_y").get<double>();
            world.agents.push_back(a);
        }

        const auto& jf = j.at("fire");
        world.fire.time = jf.at("time").get<long>();
        for (const auto& js : jf.at("sources")) {
            FireFrontSource s;
            s.position = {js.at(0).get<double>(), js.at(1).get<double>()};
            s.sigma = {js.at(2).get<double>(), js.at(3).get<double>()};
            s.active = js.at(4).get<bool>();
            world.fire.sources.push_back(s);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }

    refresh_fire_snapshot(world);
    return world;
}

} // namespace wildfire
