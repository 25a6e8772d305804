#include "uavbs/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs {

std::string_view to_string(Platform p) {
    return p == Platform::Multirotor ? "multirotor" : "fixed-wing";
}

std::string_view to_string(EquipmentCase c) {
    switch (c) {
        case EquipmentCase::None: return "NONE";
        case EquipmentCase::PvOnly: return "PV_ONLY";
        case EquipmentCase::WtOnly: return "WT_ONLY";
        case EquipmentCase::PvAndWt: return "PV_AND_WT";
    }
    return "?";
}

std::string_view to_string(Season s) {
    switch (s) {
        case Season::VernalEquinox: return "vernal_equinox";
        case Season::SummerSolstice: return "summer_solstice";
        case Season::AutumnEquinox: return "autumn_equinox";
        case Season::WinterSolstice: return "winter_solstice";
    }
    return "?";
}

Platform parse_platform(std::string_view text) {
    for (auto p : kAllPlatforms) {
        if (to_string(p) == text) return p;
    }
    throw ConfigError("unknown platform '" + std::string(text) + "'");
}

EquipmentCase parse_case(std::string_view text) {
    for (auto c : kAllCases) {
        if (to_string(c) == text) return c;
    }
    throw ConfigError("unknown equipment case '" + std::string(text) + "'");
}

Season parse_season(std::string_view text) {
    for (auto s : kAllSeasons) {
        if (to_string(s) == text) return s;
    }
    throw ConfigError("unknown season '" + std::string(text) + "'");
}

bool has_pv(EquipmentCase c) { return c == EquipmentCase::PvOnly || c == EquipmentCase::PvAndWt; }
bool has_wt(EquipmentCase c) { return c == EquipmentCase::WtOnly || c == EquipmentCase::PvAndWt; }

uav::MassBudget apply_case(uav::MassBudget mass, EquipmentCase c) {
    mass.pv_fitted = has_pv(c);
    mass.wt_fitted = has_wt(c);
    return mass;
}

Platform PlatformConfig::platform() const {
    return std::holds_alternative<uav::MultirotorParams>(airframe) ? Platform::Multirotor
                                                                   : Platform::FixedWing;
}

PlatformConfig default_platform(Platform p) {
    PlatformConfig cfg;
    if (p == Platform::Multirotor) {
        cfg.airframe = uav::MultirotorParams{};
        cfg.kinematics.velocity_mps = 0.0;
    } else {
        cfg.airframe = uav::FixedWingParams{};
        cfg.kinematics.velocity_mps = 10.0;
    }
    return cfg;
}

BatteryStep battery_step(double soc_wh, double net_power_w, std::chrono::seconds dt,
                         double capacity_wh, double charge_eff, double discharge_eff) {
    const double hours = std::chrono::duration<double, std::ratio<3600>>(dt).count();
    const double bus_energy = net_power_w * hours;
    const double raw = net_power_w >= 0.0 ? soc_wh + bus_energy * charge_eff
                                          : soc_wh + bus_energy / discharge_eff;
    BatteryStep out;
    out.soc_wh = std::clamp(raw, 0.0, capacity_wh);
    // Spill and shortfall are reported on the bus side of the converter.
    if (raw > capacity_wh) out.spilled_wh = (raw - capacity_wh) / charge_eff;
    if (raw < 0.0) out.unmet_wh = -raw * discharge_eff;
    return out;
}

namespace {

void validate_schedule(std::span<const atmosphere::WeatherSample> weather, std::chrono::seconds step) {
    if (step <= std::chrono::seconds{0}) throw ConfigError("time step must be > 0");
    if (weather.empty()) throw WeatherError("weather series is empty");
    for (std::size_t i = 0; i < weather.size(); ++i) {
        try {
            atmosphere::validate(weather[i]);
        } catch (const ModelPreconditionError& e) {
            throw WeatherError("weather sample " + std::to_string(i) + ": " + e.what());
        }
        if (i == 0) continue;
        const auto gap = weather[i].timestamp.utc - weather[i - 1].timestamp.utc;
        if (gap <= std::chrono::seconds{0}) {
            throw WeatherError("weather sample " + std::to_string(i) +
                               ": timestamps must be strictly increasing");
        }
        if (gap != step) {
            throw WeatherError("weather sample " + std::to_string(i) + ": spacing of " +
                               std::to_string(gap.count()) + " s does not match the " +
                               std::to_string(step.count()) + " s step");
        }
    }
}

void apply_override(const StepOverride& o, payload::IrsConfig& irs, payload::MimoConfig& mimo) {
    if (o.irs_elements) irs.element_count = *o.irs_elements;
    if (o.antennas) mimo.antennas = *o.antennas;
    if (o.users) mimo.users = *o.users;
}

void validate_setup(const SimulationSetup& s, std::size_t n_samples) {
    const auto& plat = s.platform;
    atmosphere::validate(plat.site);
    uav::validate(plat.mass);
    std::visit([](const auto& params) { uav::validate(params); }, plat.airframe);
    const auto& kin = plat.kinematics;
    if (!std::isfinite(kin.velocity_mps) || kin.velocity_mps < 0.0) {
        throw ModelPreconditionError("velocity must be finite and >= 0");
    }
    if (plat.platform() == Platform::FixedWing && kin.velocity_mps == 0.0) {
        throw FixedWingHoverError();
    }
    if (plat.platform() == Platform::Multirotor && !(kin.rotor_angular_velocity_rad_s > 0.0)) {
        throw ModelPreconditionError("rotor angular velocity must be > 0");
    }
    payload::validate(s.irs);
    payload::validate(s.mimo);
    res::validate(s.pv);
    res::validate(s.wt);
    if (!s.overrides.empty() && s.overrides.size() != n_samples) {
        throw ConfigError("step overrides must be empty or one per weather sample");
    }
    for (const auto& o : s.overrides) {
        auto irs = s.irs;
        auto mimo = s.mimo;
        apply_override(o, irs, mimo);
        payload::validate(irs);
        payload::validate(mimo);
    }
    if (s.battery) {
        const auto& b = *s.battery;
        if (!(b.capacity_wh >= 0.0 && b.initial_soc_wh >= 0.0 && b.initial_soc_wh <= b.capacity_wh &&
              b.charge_efficiency > 0.0 && b.charge_efficiency <= 1.0 &&
              b.discharge_efficiency > 0.0 && b.discharge_efficiency <= 1.0)) {
            throw ConfigError("battery needs 0 <= initial_soc <= capacity and efficiencies in (0,1]");
        }
    }
}

}  // namespace

void check_simulation_inputs(const SimulationSetup& setup,
                             std::span<const atmosphere::WeatherSample> weather) {
    validate_schedule(weather, setup.step);
    validate_setup(setup, weather.size());
}

EnergyLedger simulate(const SimulationSetup& setup,
                      std::span<const atmosphere::WeatherSample> weather) {
    check_simulation_inputs(setup, weather);

    const auto mass = apply_case(setup.platform.mass, setup.equipment);
    const bool pv_on = has_pv(setup.equipment);
    const bool wt_on = has_wt(setup.equipment);

    EnergyLedger ledger;
    ledger.step = setup.step;
    ledger.records.reserve(weather.size());
    const double dt_h = ledger.step_hours();

    double consumed_wh = 0.0;
    double harvested_wh = 0.0;
    double soc_wh = setup.battery ? setup.battery->initial_soc_wh : 0.0;

    for (std::size_t i = 0; i < weather.size(); ++i) {
        const auto& sample = weather[i];
        const auto air = atmosphere::air_density(sample, setup.constants);

        auto irs = setup.irs;
        auto mimo = setup.mimo;
        if (!setup.overrides.empty()) apply_override(setup.overrides[i], irs, mimo);

        LedgerRecord rec;
        rec.timestamp = sample.timestamp;
        rec.power.propulsion =
            uav::propulsion_power(setup.platform.airframe, setup.platform.kinematics, mass, air);
        rec.power.irs = payload::irs_power(irs);
        rec.power.mimo = payload::mimo_power(mimo).total;
        rec.power.total_consumption = rec.power.propulsion + rec.power.mimo + rec.power.irs;

        if (pv_on) {
            const double g_t = atmosphere::solar_irradiance(sample, setup.platform.site, setup.constants);
            const double t_c = atmosphere::pv_cell_temperature(sample, g_t, setup.constants);
            rec.harvest.pv = res::pv_power(setup.pv, g_t, t_c);
        }
        if (wt_on) {
            const double hub = atmosphere::wind_at_height(sample, setup.platform.site);
            rec.harvest.wt = res::wt_power(setup.wt, hub, air);
        }
        rec.harvest.total_harvest = rec.harvest.pv + rec.harvest.wt;
        rec.net_w = rec.harvest.total_harvest - rec.power.total_consumption;

        consumed_wh += rec.power.total_consumption * dt_h;
        harvested_wh += rec.harvest.total_harvest * dt_h;
        rec.cumulative_consumed_wh = consumed_wh;
        rec.cumulative_harvested_wh = harvested_wh;

        if (setup.battery) {
            const auto& b = *setup.battery;
            rec.battery = battery_step(soc_wh, rec.net_w, setup.step, b.capacity_wh,
                                       b.charge_efficiency, b.discharge_efficiency);
            soc_wh = rec.battery->soc_wh;
        }
        ledger.records.push_back(rec);
    }
    return ledger;
}

std::vector<double> normalize_series(std::span<const double> values) {
    std::vector<double> out(values.size(), 0.0);
    if (values.empty()) return out;
    const double peak = *std::max_element(values.begin(), values.end());
    if (!(peak > 0.0)) return out;
    std::transform(values.begin(), values.end(), out.begin(), [peak](double v) { return v / peak; });
    return out;
}

std::array<SeasonPreset, 4> seasonal_presets() {
    using namespace std::chrono;
    using namespace std::chrono_literals;
    atmosphere::SiteConfig poznan;  // defaults are the Poznan coordinates

    std::vector<std::pair<Platform, EquipmentCase>> grid;
    for (auto p : kAllPlatforms) {
        for (auto c : kAllCases) grid.emplace_back(p, c);
    }
    // CET in winter and on 20 March (DST began 27 March 2022), CEST otherwise.
    return {{
        {Season::VernalEquinox, 2022y / March / 20, 60min, poznan, grid},
        {Season::SummerSolstice, 2022y / June / 21, 120min, poznan, grid},
        {Season::AutumnEquinox, 2022y / September / 23, 120min, poznan, grid},
        {Season::WinterSolstice, 2022y / December / 21, 60min, poznan, grid},
    }};
}

}  // namespace uavbs
