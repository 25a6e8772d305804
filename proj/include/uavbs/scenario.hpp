#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "uavbs/atmosphere.hpp"
#include "uavbs/payload_power.hpp"
#include "uavbs/res_harvest.hpp"
#include "uavbs/uav_power.hpp"

namespace uavbs {

enum class Platform { Multirotor, FixedWing };
enum class EquipmentCase { None, PvOnly, WtOnly, PvAndWt };
enum class Season { VernalEquinox, SummerSolstice, AutumnEquinox, WinterSolstice };

inline constexpr std::array kAllPlatforms{Platform::Multirotor, Platform::FixedWing};
inline constexpr std::array kAllCases{EquipmentCase::None, EquipmentCase::PvOnly,
                                      EquipmentCase::WtOnly, EquipmentCase::PvAndWt};
inline constexpr std::array kAllSeasons{Season::VernalEquinox, Season::SummerSolstice,
                                        Season::AutumnEquinox, Season::WinterSolstice};

// Canonical names: "multirotor" / "fixed-wing", "NONE" / "PV_ONLY" / "WT_ONLY" /
// "PV_AND_WT", "vernal_equinox" / "summer_solstice" / ... Parsers throw ConfigError.
std::string_view to_string(Platform p);
std::string_view to_string(EquipmentCase c);
std::string_view to_string(Season s);
Platform parse_platform(std::string_view text);
EquipmentCase parse_case(std::string_view text);
Season parse_season(std::string_view text);

bool has_pv(EquipmentCase c);
bool has_wt(EquipmentCase c);

/// Returns `mass` with the generator toggles set to match the case.
uav::MassBudget apply_case(uav::MassBudget mass, EquipmentCase c);

struct PlatformConfig {
    uav::AirframeParams airframe = uav::MultirotorParams{};
    uav::MassBudget mass{};
    uav::KinematicState kinematics{};
    atmosphere::SiteConfig site{};

    Platform platform() const;
};

/// Hovering multirotor (v = 0) or fixed-wing cruising at 10 m/s, both with the
/// reference airframe parameters.
PlatformConfig default_platform(Platform p);

struct BatteryConfig {
    double capacity_wh = 0.0;
    double initial_soc_wh = 0.0;
    double charge_efficiency = 1.0;
    double discharge_efficiency = 1.0;
};

struct BatteryStep {
    double soc_wh = 0.0;
    double spilled_wh = 0.0;  // surplus that did not fit
    double unmet_wh = 0.0;    // deficit the battery could not cover
};

/// Clipped state-of-charge update. Charging is scaled by charge_eff,
/// discharging draws net/discharge_eff from the store.
BatteryStep battery_step(double soc_wh, double net_power_w, std::chrono::seconds dt,
                         double capacity_wh, double charge_eff, double discharge_eff);

/// Per-step payload overrides; unset fields keep the configured value.
struct StepOverride {
    std::optional<int> irs_elements;
    std::optional<int> antennas;
    std::optional<int> users;
};

struct SimulationSetup {
    PlatformConfig platform{};
    EquipmentCase equipment = EquipmentCase::None;
    payload::IrsConfig irs{};
    payload::MimoConfig mimo{};
    res::PvConfig pv{};
    res::WtConfig wt{};
    atmosphere::Constants constants{};
    std::chrono::seconds step{3600};
    std::optional<BatteryConfig> battery;
    std::vector<StepOverride> overrides;  // empty, or one per weather sample
};

struct PowerBreakdown {
    double propulsion = 0.0;
    double mimo = 0.0;
    double irs = 0.0;
    double total_consumption = 0.0;
};

struct HarvestBreakdown {
    double pv = 0.0;
    double wt = 0.0;
    double total_harvest = 0.0;
};

struct LedgerRecord {
    Timestamp timestamp;
    PowerBreakdown power;
    HarvestBreakdown harvest;
    double net_w = 0.0;
    double cumulative_consumed_wh = 0.0;
    double cumulative_harvested_wh = 0.0;
    std::optional<BatteryStep> battery;
};

struct EnergyLedger {
    std::chrono::seconds step{3600};
    std::vector<LedgerRecord> records;

    double step_hours() const { return std::chrono::duration<double, std::ratio<3600>>(step).count(); }
};

/// Walks the weather series and integrates consumption and harvest with the
/// left-rectangle rule. All inputs are validated before the first step:
/// WeatherError for empty, unordered or unevenly spaced series,
/// ModelPreconditionError / ConfigError for bad model inputs.
EnergyLedger simulate(const SimulationSetup& setup, std::span<const atmosphere::WeatherSample> weather);

/// Divides by the series maximum. An all-zero (or non-positive-max) series
/// maps to zeros.
std::vector<double> normalize_series(std::span<const double> values);

struct SeasonPreset {
    Season season;
    std::chrono::year_month_day date;
    std::chrono::minutes utc_offset;  // local civil time on that date
    atmosphere::SiteConfig site;
    std::vector<std::pair<Platform, EquipmentCase>> grid;
};

/// Runs every precondition check `simulate` performs, without stepping.
void check_simulation_inputs(const SimulationSetup& setup,
                             std::span<const atmosphere::WeatherSample> weather);

/// The four 2022 season-opening dates at Poznan with the full platform x case grid.
std::array<SeasonPreset, 4> seasonal_presets();

}  // namespace uavbs
