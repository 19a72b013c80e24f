#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wildfire/config.hpp"
#include "wildfire/sim.hpp"
#include "wildfire/snapshot_io.hpp"
#include "wildfire/svg.hpp"

int main(int argc, char** argv) {
    CLI::App app{"decentralized wildfire coverage simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, world_path, svg_path;
    std::optional<std::uint64_t> seed;
    std::optional<long> steps, snapshot_every;
    bool quiet = false;
    if (const char* lv = std::getenv("FIRECOV_LOG"); lv && std::string(lv) == "quiet") {
        quiet = true;
    }

    CLI::App* run = app.add_subcommand("run", "run a scenario");
    run->add_option("--config", config_path)->required();
    run->add_option("--out", out_dir)->required();
    run->add_option("--seed", seed);
    run->add_option("--steps", steps);
    run->add_option("--snapshot-every", snapshot_every);
    run->add_flag("--quiet", quiet);

    CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--config", config_path)->required();

    CLI::App* render = app.add_subcommand("render", "render a world snapshot to SVG");
    render->add_option("--world", world_path)->required();
    render->add_option("--out", svg_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            wildfire::load_config(config_path);
            if (!quiet) std::printf("ok\n");
            return 0;
        }
        if (render->parsed()) {
            wildfire::GridSpec grid;
            wildfire::WorldState world = wildfire::read_world_json(world_path, grid);
            std::ofstream out(svg_path);
            if (!out) {
                std::fprintf(stderr, "error: cannot open %s\n", svg_path.c_str());
                return 2;
            }
            out << wildfire::render_svg(world, grid);
            return 0;
        }

        wildfire::ScenarioConfig config = wildfire::load_config(config_path);
        if (seed) config.seed = *seed;
        if (steps) config.steps = *steps;
        if (snapshot_every) config.snapshot_every = *snapshot_every;
        wildfire::validate_config(config);

        return wildfire::run_scenario(config, out_dir, quiet).exit_code;
    } catch (const wildfire::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
