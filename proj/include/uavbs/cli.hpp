#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uavbs::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kConfigError = 2,
    kWeatherError = 3,
    kModelError = 4,
};

struct RunManifest {
    std::filesystem::path scenario;    // empty: built-in table1 preset
    std::vector<std::string> weather;  // "season=path" entries or directories of <season>.csv
    std::vector<std::string> platforms;
    std::vector<std::string> cases;
    std::vector<std::string> seasons;
    std::filesystem::path out_dir = "out";
    bool emit_svg = false;
    std::optional<std::string> step;
};

/// Runs the selected grid and writes ledgers, normalized series, a summary
/// and optionally charts into `out_dir`. Returns an ExitCode.
int run(const RunManifest& manifest, std::ostream& log, std::ostream& err);

/// Loads and checks config and weather without simulating.
int validate(const RunManifest& manifest, std::ostream& log, std::ostream& err);

/// The seasonal bundles and the table1 parameter preset as JSON text.
std::string presets_json();

}  // namespace uavbs::cli
