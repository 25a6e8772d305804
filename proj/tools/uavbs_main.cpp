#include <iostream>

#include <CLI11.hpp>

#include "uavbs/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Weather-driven energy budget simulator for UAV base stations"};
    app.require_subcommand(1);

    uavbs::cli::RunManifest manifest;
    std::string step;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", manifest.scenario, "Scenario JSON file (default: table1 preset)");
        cmd->add_option("--weather", manifest.weather,
                        "Weather CSV as season=path, or a directory of <season>.csv files");
        cmd->add_option("--step", step, "Time step, e.g. 3600, 1h, 30min");
        cmd->add_option("--platform", manifest.platforms, "multirotor | fixed-wing (repeatable)");
        cmd->add_option("--case", manifest.cases, "NONE | PV_ONLY | WT_ONLY | PV_AND_WT (repeatable)");
        cmd->add_option("--season", manifest.seasons,
                        "vernal_equinox | summer_solstice | autumn_equinox | winter_solstice (repeatable)");
    };

    auto* simulate = app.add_subcommand("simulate", "Run the platform x case x season grid");
    add_common(simulate);
    simulate->add_option("--out", manifest.out_dir, "Output directory")->capture_default_str();
    simulate->add_flag("--svg", manifest.emit_svg, "Also write SVG charts");

    auto* validate = app.add_subcommand("validate", "Check configuration and weather without running");
    add_common(validate);

    app.add_subcommand("presets", "Print the seasonal bundles and the table1 parameter preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : uavbs::cli::kConfigError;
    }
    if (!step.empty()) manifest.step = step;

    if (simulate->parsed()) return uavbs::cli::run(manifest, std::cout, std::cerr);
    if (validate->parsed()) return uavbs::cli::validate(manifest, std::cout, std::cerr);
    std::cout << uavbs::cli::presets_json();
    return 0;
}
