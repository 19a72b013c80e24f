#include "wildfire/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace wildfire {

namespace {

struct Field {
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
    }
}

long to_long(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != std::floor(d)) {
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + v + "'");
    }
    return static_cast<long>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("config: key '" + key + "' expects true/false, got '" + v + "'");
}

const std::map<std::string, Field>& schema() {
    static const std::map<std::string, Field> fields = [] {
        std::map<std::string, Field> m;
        auto num = [&m](const std::string& key, auto member) {
            m[key] = {[key, member](ScenarioConfig& c, const std::string& v) {
                          c.*member = to_double(key, v);
                      },
                      [member](const ScenarioConfig& c) { return fmt(c.*member); }};
        };
        auto num_at = [&m](const std::string& key, auto access) {
            m[key] = {[key, access](ScenarioConfig& c, const std::string& v) {
                          access(c) = to_double(key, v);
                      },
                      [access](const ScenarioConfig& c) {
                          return fmt(access(const_cast<ScenarioConfig&>(c)));
                      }};
        };
        auto int_at = [&m](const std::string& key, auto access) {
            m[key] = {[key, access](ScenarioConfig& c, const std::string& v) {
                          access(c) = to_long(key, v);
                      },
                      [access](const ScenarioConfig& c) {
                          return std::to_string(access(const_cast<ScenarioConfig&>(c)));
                      }};
        };

        int_at("run.steps", [](ScenarioConfig& c) -> long& { return c.steps; });
        num("run.dt", &ScenarioConfig::dt);
        m["run.seed"] = {[](ScenarioConfig& c, const std::string& v) {
                             c.seed = static_cast<std::uint64_t>(to_long("run.seed", v));
                         },
                         [](const ScenarioConfig& c) { return std::to_string(c.seed); }};
        int_at("run.snapshot_every", [](ScenarioConfig& c) -> long& { return c.snapshot_every; });
        m["run.threads"] = {[](ScenarioConfig& c, const std::string& v) {
                                c.threads = static_cast<int>(to_long("run.threads", v));
                            },
                            [](const ScenarioConfig& c) { return std::to_string(c.threads); }};

        m["agents.count"] = {[](ScenarioConfig& c, const std::string& v) {
                                 c.agent_count = static_cast<int>(to_long("agents.count", v));
                             },
                             [](const ScenarioConfig& c) { return std::to_string(c.agent_count); }};
        num_at("agents.start_x", [](ScenarioConfig& c) -> double& { return c.start_center.x; });
        num_at("agents.start_y", [](ScenarioConfig& c) -> double& { return c.start_center.y; });
        num("agents.jitter_radius", &ScenarioConfig::jitter_radius);

        num_at("rendezvous.x", [](ScenarioConfig& c) -> double& { return c.rendezvous.x; });
        num_at("rendezvous.y", [](ScenarioConfig& c) -> double& { return c.rendezvous.y; });
        num_at("rendezvous.z", [](ScenarioConfig& c) -> double& { return c.rendezvous.z; });

        num_at("wind.mean_direction", [](ScenarioConfig& c) -> double& { return c.wind.mean_direction; });
        num_at("wind.std_direction", [](ScenarioConfig& c) -> double& { return c.wind.std_direction; });
        num_at("wind.mean_speed", [](ScenarioConfig& c) -> double& { return c.wind.mean_speed; });
        num_at("wind.std_speed", [](ScenarioConfig& c) -> double& { return c.wind.std_speed; });
        m["wind.shared"] = {[](ScenarioConfig& c, const std::string& v) {
                                c.wind_shared = to_bool("wind.shared", v);
                            },
                            [](const ScenarioConfig& c) {
                                return c.wind_shared ? std::string("true") : std::string("false");
                            }};

        num_at("spread.rate", [](ScenarioConfig& c) -> double& { return c.spread.rate; });
        num_at("spread.dt", [](ScenarioConfig& c) -> double& { return c.spread.dt; });

        m["fire.step_every"] = {[](ScenarioConfig& c, const std::string& v) {
                                    c.fire_step_every = static_cast<int>(to_long("fire.step_every", v));
                                },
                                [](const ScenarioConfig& c) { return std::to_string(c.fire_step_every); }};
        num("fire.min_front_separation", &ScenarioConfig::min_front_separation);
        m["fire.seed_count"] = {[](ScenarioConfig& c, const std::string& v) {
                                    c.fire_seed_count = static_cast<int>(to_long("fire.seed_count", v));
                                },
                                [](const ScenarioConfig& c) { return std::to_string(c.fire_seed_count); }};
        num_at("fire.center_x", [](ScenarioConfig& c) -> double& { return c.fire_center.x; });
        num_at("fire.center_y", [](ScenarioConfig& c) -> double& { return c.fire_center.y; });
        num("fire.seed_spacing", &ScenarioConfig::fire_seed_spacing);
        num("fire.sigma", &ScenarioConfig::fire_sigma);
        num("fire.cutoff_sigmas", &ScenarioConfig::intensity_cutoff_sigmas);

        num_at("camera.focal_length", [](ScenarioConfig& c) -> double& { return c.camera.focal_length; });
        num_at("camera.pixel_area", [](ScenarioConfig& c) -> double& { return c.camera.pixel_area; });
        num_at("camera.half_angle_x", [](ScenarioConfig& c) -> double& { return c.camera.half_angle_x; });
        num_at("camera.half_angle_y", [](ScenarioConfig& c) -> double& { return c.camera.half_angle_y; });
        num_at("camera.intensity_min", [](ScenarioConfig& c) -> double& { return c.camera.intensity_min; });
        num_at("camera.intensity_max", [](ScenarioConfig& c) -> double& { return c.camera.intensity_max; });
        num_at("camera.importance_gain", [](ScenarioConfig& c) -> double& { return c.camera.importance_gain; });
        num_at("camera.regularizer", [](ScenarioConfig& c) -> double& { return c.camera.regularizer; });

        m["coverage.mode"] = {[](ScenarioConfig& c, const std::string& v) {
                                  if (v == "border") {
                                      c.camera.uniform_importance = false;
                                  } else if (v == "uniform") {
                                      c.camera.uniform_importance = true;
                                  } else {
                                      throw ConfigError(
                                          "config: key 'coverage.mode' expects border|uniform, got '" + v + "'");
                                  }
                              },
                              [](const ScenarioConfig& c) {
                                  return c.camera.uniform_importance ? std::string("uniform")
                                                                     : std::string("border");
                              }};
        num_at("coverage.lateral_gain", [](ScenarioConfig& c) -> double& { return c.gains.lateral_gain; });
        num_at("coverage.vertical_gain", [](ScenarioConfig& c) -> double& { return c.gains.vertical_gain; });
        num_at("coverage.gradient_clip", [](ScenarioConfig& c) -> double& { return c.gains.gradient_clip; });
        m["coverage.interior_cells"] = {
            [](ScenarioConfig& c, const std::string& v) {
                c.discretization.interior_cells = static_cast<int>(to_long("coverage.interior_cells", v));
            },
            [](const ScenarioConfig& c) { return std::to_string(c.discretization.interior_cells); }};
        m["coverage.edge_points"] = {
            [](ScenarioConfig& c, const std::string& v) {
                c.discretization.edge_points = static_cast<int>(to_long("coverage.edge_points", v));
            },
            [](const ScenarioConfig& c) { return std::to_string(c.discretization.edge_points); }};

        num_at("safety.safe_distance", [](ScenarioConfig& c) -> double& { return c.safety.safe_distance; });
        num_at("safety.min_altitude", [](ScenarioConfig& c) -> double& { return c.safety.min_altitude; });
        num_at("safety.neighbor_gain", [](ScenarioConfig& c) -> double& { return c.safety.neighbor_gain; });
        num_at("safety.ground_gain", [](ScenarioConfig& c) -> double& { return c.safety.ground_gain; });
        num("safety.max_altitude", &ScenarioConfig::max_altitude);

        num("potential.rendezvous_gain", &ScenarioConfig::rendezvous_gain);
        num("potential.desired_gain", &ScenarioConfig::desired_gain);

        num("comm.radius", &ScenarioConfig::comm_radius);

        num_at("grid.xmin", [](ScenarioConfig& c) -> double& { return c.grid.xmin; });
        num_at("grid.ymin", [](ScenarioConfig& c) -> double& { return c.grid.ymin; });
        num_at("grid.xmax", [](ScenarioConfig& c) -> double& { return c.grid.xmax; });
        num_at("grid.ymax", [](ScenarioConfig& c) -> double& { return c.grid.ymax; });
        m["grid.nx"] = {[](ScenarioConfig& c, const std::string& v) {
                            c.grid.nx = static_cast<int>(to_long("grid.nx", v));
                        },
                        [](const ScenarioConfig& c) { return std::to_string(c.grid.nx); }};
        m["grid.ny"] = {[](ScenarioConfig& c, const std::string& v) {
                            c.grid.ny = static_cast<int>(to_long("grid.ny", v));
                        },
                        [](const ScenarioConfig& c) { return std::to_string(c.grid.ny); }};
        return m;
    }();
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError("config: " + message);
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = schema().find(key);
        if (it == schema().end()) {
            throw ConfigError("config: unknown key '" + key + "'");
        }
        it->second.set(config, value);
    }
    validate_config(config);
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& config) {
    std::ostringstream out;
    for (const auto& [key, field] : schema()) {
        out << key << " = " << field.get(config) << "\n";
    }
    return out.str();
}

void validate_config(const ScenarioConfig& c) {
    require(c.steps >= 0, "run.steps must be >= 0");
    require(c.dt > 0, "run.dt must be positive");
    require(c.snapshot_every > 0, "run.snapshot_every must be positive");
    require(c.agent_count >= 0, "agents.count must be >= 0");
    require(c.jitter_radius >= 0, "agents.jitter_radius must be >= 0");
    require(c.wind.std_direction >= 0, "wind.std_direction must be >= 0");
    require(c.wind.std_speed >= 0, "wind.std_speed must be >= 0");
    require(c.spread.rate >= 0, "spread.rate must be >= 0");
    require(c.spread.dt > 0, "spread.dt must be positive");
    require(c.fire_step_every > 0, "fire.step_every must be positive");
    require(c.min_front_separation >= 0, "fire.min_front_separation must be >= 0");
    require(c.fire_seed_count >= 1, "fire.seed_count must be >= 1");
    require(c.fire_sigma > 0, "fire.sigma must be positive");
    require(c.intensity_cutoff_sigmas >= 0, "fire.cutoff_sigmas must be >= 0");
    require(c.camera.focal_length > 0, "camera.focal_length must be positive");
    require(c.camera.pixel_area > 0, "camera.pixel_area must be positive");
    require(c.camera.half_angle_x > 0 && c.camera.half_angle_x < M_PI / 2,
            "camera.half_angle_x must lie in (0, pi/2)");
    require(c.camera.half_angle_y > 0 && c.camera.half_angle_y < M_PI / 2,
            "camera.half_angle_y must lie in (0, pi/2)");
    require(c.camera.intensity_min < c.camera.intensity_max,
            "camera.intensity_min must be below camera.intensity_max");
    require(c.camera.regularizer > 0, "camera.regularizer must be positive");
    require(c.gains.lateral_gain >= 0, "coverage.lateral_gain must be >= 0");
    require(c.gains.vertical_gain >= 0, "coverage.vertical_gain must be >= 0");
    require(c.gains.gradient_clip >= 0, "coverage.gradient_clip must be >= 0");
    require(c.discretization.interior_cells >= 4, "coverage.interior_cells must be >= 4");
    require(c.discretization.edge_points >= 1, "coverage.edge_points must be >= 1");
    require(c.safety.safe_distance > 0, "safety.safe_distance must be positive");
    require(c.safety.min_altitude > 0, "safety.min_altitude must be positive");
    require(c.safety.neighbor_gain > 0, "safety.neighbor_gain must be positive");
    require(c.safety.ground_gain > 0, "safety.ground_gain must be positive");
    require(c.rendezvous_gain >= 0, "potential.rendezvous_gain must be >= 0");
    require(c.desired_gain >= 0, "potential.desired_gain must be >= 0");
    require(c.comm_radius >= 0, "comm.radius must be >= 0");
    require(c.grid.nx >= 1 && c.grid.ny >= 1, "grid.nx and grid.ny must be >= 1");
    require(c.grid.xmax > c.grid.xmin && c.grid.ymax > c.grid.ymin,
            "grid extent is degenerate");

    // Hovering below the focus plane inverts the resolution trade-off, so the
    // ground floor must sit above it.
    require(c.safety.min_altitude > c.camera.focal_length,
            "safety.min_altitude must exceed camera.focal_length");
    // Two agents whose FOVs can overlap must be able to communicate.
    const double overlap_span = 4.0 * c.max_altitude *
                                std::max(std::tan(c.camera.half_angle_x),
                                         std::tan(c.camera.half_angle_y));
    require(c.comm_radius >= overlap_span,
            "comm.radius must be at least 4 * safety.max_altitude * max(tan(half angles))");
}

WorldState build_world(const ScenarioConfig& c) {
    WorldState world;
    world.comm_radius = c.comm_radius;
    world.fire_step_every = c.fire_step_every;
    world.fire_opts = {c.min_front_separation, c.wind_shared};
    world.intensity_cutoff_sigmas = c.intensity_cutoff_sigmas;
    world.threads = c.threads;
    world.fire_rng = Rng(c.seed);

    world.fire.wind = c.wind;
    world.fire.spread = c.spread;
    for (int i = 0; i < c.fire_seed_count; ++i) {
        const double angle = 2.0 * M_PI * i / c.fire_seed_count;
        world.fire.sources.push_back(
            {{c.fire_center.x + c.fire_seed_spacing * std::sin(angle),
              c.fire_center.y + c.fire_seed_spacing * std::cos(angle)},
             {c.fire_sigma, c.fire_sigma},
             true});
    }
    refresh_fire_snapshot(world);

    AgentParams params;
    params.ctrl = c.gains;
    params.ctrl.dt = c.dt;
    params.attract = {c.rendezvous_gain, c.desired_gain, c.rendezvous, c.dt};
    params.safety = c.safety;
    params.cam = c.camera;
    params.disc = c.discretization;

    Rng placement(c.seed ^ 0x9e3779b97f4a7c15ull);
    for (int i = 0; i < c.agent_count; ++i) {
        AgentState a;
        a.id = i;
        const double angle = placement.uniform(0.0, 2.0 * M_PI);
        const double radius = c.jitter_radius * std::sqrt(placement.uniform01());
        a.pose = {c.start_center.x + radius * std::cos(angle),
                  c.start_center.y + radius * std::sin(angle), 0.0};
        a.desired = a.pose;
        a.params = params;
        world.agents.push_back(a);
    }
    return world;
}

} // namespace wildfire
