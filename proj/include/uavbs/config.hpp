#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uavbs/scenario.hpp"

namespace uavbs::config {

struct RunGrid {
    std::chrono::seconds step{3600};
    std::vector<Platform> platforms{kAllPlatforms.begin(), kAllPlatforms.end()};
    std::vector<EquipmentCase> cases{kAllCases.begin(), kAllCases.end()};
    std::vector<Season> seasons;  // empty: every season that has weather
    std::map<Season, std::filesystem::path> weather;
};

/// Everything one experiment needs. Defaults reproduce the reference
/// parameter table ("table1").
struct ScenarioConfig {
    atmosphere::SiteConfig site{};
    atmosphere::Constants constants{};
    uav::MassBudget mass{};
    uav::MultirotorParams multirotor{};
    uav::KinematicState multirotor_kinematics{};
    uav::FixedWingParams fixed_wing{};
    uav::KinematicState fixed_wing_kinematics{.velocity_mps = 10.0};
    payload::IrsConfig irs{};
    payload::MimoConfig mimo{};
    std::string mimo_coefficient_preset = "zero";
    res::PvConfig pv{};
    res::WtConfig wt{};
    std::optional<BatteryConfig> battery;
    RunGrid run{};
};

ScenarioConfig table1_preset();

/// Overlays `doc` on the table1 preset. Unknown keys and bad values raise
/// ConfigError naming the offending key. Relative file references resolve
/// against `base_dir`.
ScenarioConfig parse_scenario(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

ScenarioConfig load_scenario(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ScenarioConfig& cfg);

/// Reads a `wind_speed_mps,normalized_power` knot file.
res::PowerCurve load_power_curve_csv(const std::filesystem::path& path);

SimulationSetup make_setup(const ScenarioConfig& cfg, Platform platform, EquipmentCase equipment);

/// Accepts plain seconds ("3600") or a suffixed value ("1h", "30min", "900s").
std::chrono::seconds parse_step(const std::string& text);

}  // namespace uavbs::config
