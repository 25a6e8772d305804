#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "uavbs/atmosphere.hpp"
#include "uavbs/cli.hpp"
#include "uavbs/config.hpp"
#include "uavbs/error.hpp"
#include "uavbs/io.hpp"
#include "uavbs/payload_power.hpp"
#include "uavbs/res_harvest.hpp"
#include "uavbs/scenario.hpp"
#include "uavbs/uav_power.hpp"

namespace py = pybind11;
using namespace uavbs;

namespace {

atmosphere::WeatherSample make_sample(const std::string& ts, double temp_c, double pressure_pa,
                                      double rel_humidity, double wind_mps, double cloud_opacity) {
    return {parse_timestamp(ts), temp_c, pressure_pa, rel_humidity, wind_mps, cloud_opacity};
}

std::string ledger_to_csv(const EnergyLedger& ledger) {
    std::ostringstream out;
    io::write_ledger_csv(out, ledger);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Propulsion, payload and renewable-harvest power models with a time-stepped ledger";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<WeatherError>(m, "WeatherError", base.ptr());
    auto model = py::register_exception<ModelPreconditionError>(m, "ModelPreconditionError", base.ptr());
    py::register_exception<FixedWingHoverError>(m, "FixedWingHoverError", model.ptr());
    py::register_exception<UnknownBitResolutionError>(m, "UnknownBitResolutionError", model.ptr());

    // atmosphere
    py::class_<atmosphere::WeatherSample>(m, "WeatherSample")
        .def(py::init(&make_sample), py::arg("timestamp"), py::arg("temp_c") = 15.0,
             py::arg("pressure_pa") = 101325.0, py::arg("rel_humidity") = 0.0,
             py::arg("wind_mps") = 0.0, py::arg("cloud_opacity") = 0.0)
        .def_property_readonly("timestamp",
                               [](const atmosphere::WeatherSample& s) { return format_timestamp(s.timestamp); })
        .def_readwrite("temp_c", &atmosphere::WeatherSample::ambient_temp_c)
        .def_readwrite("pressure_pa", &atmosphere::WeatherSample::pressure_pa)
        .def_readwrite("rel_humidity", &atmosphere::WeatherSample::rel_humidity)
        .def_readwrite("wind_mps", &atmosphere::WeatherSample::wind_speed_ref_mps)
        .def_readwrite("cloud_opacity", &atmosphere::WeatherSample::cloud_opacity);

    py::class_<atmosphere::SiteConfig>(m, "SiteConfig")
        .def(py::init<>())
        .def_readwrite("latitude_deg", &atmosphere::SiteConfig::latitude_deg)
        .def_readwrite("longitude_deg", &atmosphere::SiteConfig::longitude_deg)
        .def_readwrite("altitude_agl_m", &atmosphere::SiteConfig::altitude_agl_m)
        .def_readwrite("ref_height_m", &atmosphere::SiteConfig::ref_height_m)
        .def_readwrite("roughness_length_m", &atmosphere::SiteConfig::roughness_length_m);

    py::class_<atmosphere::Constants>(m, "AtmosphereConstants")
        .def(py::init<>())
        .def_readwrite("r_dry", &atmosphere::Constants::r_dry)
        .def_readwrite("r_vapor", &atmosphere::Constants::r_vapor)
        .def_readwrite("noct_c", &atmosphere::Constants::noct_c)
        .def_readwrite("cloud_attenuation", &atmosphere::Constants::cloud_attenuation);

    py::class_<atmosphere::AirState>(m, "AirState")
        .def(py::init([](double rho, double t_k) { return atmosphere::AirState{rho, t_k}; }),
             py::arg("density_kg_m3"), py::arg("temperature_k") = 288.15)
        .def_readwrite("density_kg_m3", &atmosphere::AirState::density_kg_m3)
        .def_readwrite("temperature_k", &atmosphere::AirState::temperature_k);

    m.def("air_density", &atmosphere::air_density, py::arg("sample"),
          py::arg("constants") = atmosphere::Constants{});
    m.def("wind_at_height", &atmosphere::wind_at_height, py::arg("sample"), py::arg("site"));
    m.def("solar_elevation_deg",
          [](const std::string& ts, double lat, double lon) {
              return atmosphere::solar_elevation_deg(parse_timestamp(ts), lat, lon);
          },
          py::arg("timestamp"), py::arg("latitude_deg"), py::arg("longitude_deg"));
    m.def("solar_irradiance", &atmosphere::solar_irradiance, py::arg("sample"), py::arg("site"),
          py::arg("constants") = atmosphere::Constants{});
    m.def("pv_cell_temperature", &atmosphere::pv_cell_temperature, py::arg("sample"),
          py::arg("irradiance_w_m2"), py::arg("constants") = atmosphere::Constants{});

    // uav_power
    py::class_<uav::MassBudget>(m, "MassBudget")
        .def(py::init<>())
        .def_readwrite("m_uav", &uav::MassBudget::m_uav)
        .def_readwrite("m_batt", &uav::MassBudget::m_batt)
        .def_readwrite("m_rf", &uav::MassBudget::m_rf)
        .def_readwrite("m_irs", &uav::MassBudget::m_irs)
        .def_readwrite("m_pv", &uav::MassBudget::m_pv)
        .def_readwrite("m_wt", &uav::MassBudget::m_wt)
        .def_readwrite("m_pkg", &uav::MassBudget::m_pkg)
        .def_readwrite("pv_fitted", &uav::MassBudget::pv_fitted)
        .def_readwrite("wt_fitted", &uav::MassBudget::wt_fitted)
        .def("total_mass", &uav::MassBudget::total_mass);

    py::class_<uav::KinematicState>(m, "KinematicState")
        .def(py::init<>())
        .def_readwrite("velocity_mps", &uav::KinematicState::velocity_mps)
        .def_readwrite("accel_forward_mps2", &uav::KinematicState::accel_forward_mps2)
        .def_readwrite("accel_centripetal_mps2", &uav::KinematicState::accel_centripetal_mps2)
        .def_readwrite("rotor_angular_velocity_rad_s", &uav::KinematicState::rotor_angular_velocity_rad_s);

    py::class_<uav::FixedWingParams>(m, "FixedWingParams")
        .def(py::init<>())
        .def_readwrite("c_d0", &uav::FixedWingParams::c_d0)
        .def_readwrite("e0", &uav::FixedWingParams::e0)
        .def_readwrite("aspect_ratio", &uav::FixedWingParams::aspect_ratio)
        .def_readwrite("wing_area_m2", &uav::FixedWingParams::wing_area_m2)
        .def_readwrite("g", &uav::FixedWingParams::g);

    py::enum_<uav::InducedPowerForm>(m, "InducedPowerForm")
        .value("SquareRoot", uav::InducedPowerForm::SquareRoot)
        .value("AsPrinted", uav::InducedPowerForm::AsPrinted);

    py::class_<uav::MultirotorParams>(m, "MultirotorParams")
        .def(py::init<>())
        .def_readwrite("profile_drag", &uav::MultirotorParams::profile_drag)
        .def_readwrite("induced_correction", &uav::MultirotorParams::induced_correction)
        .def_readwrite("thrust_to_weight", &uav::MultirotorParams::thrust_to_weight)
        .def_readwrite("fuselage_drag_ratio", &uav::MultirotorParams::fuselage_drag_ratio)
        .def_readwrite("rotor_area_m2", &uav::MultirotorParams::rotor_area_m2)
        .def_readwrite("rotor_radius_m", &uav::MultirotorParams::rotor_radius_m)
        .def_readwrite("rotor_solidity", &uav::MultirotorParams::rotor_solidity)
        .def_readwrite("rotor_count", &uav::MultirotorParams::rotor_count)
        .def_readwrite("g", &uav::MultirotorParams::g)
        .def_readwrite("induced_form", &uav::MultirotorParams::induced_form);

    m.def("fixed_wing_power", &uav::fixed_wing_power, py::arg("state"), py::arg("mass"), py::arg("air"),
          py::arg("params") = uav::FixedWingParams{});
    m.def("fixed_wing_min_power_speed", &uav::fixed_wing_min_power_speed, py::arg("mass"), py::arg("air"),
          py::arg("params") = uav::FixedWingParams{});
    m.def("multirotor_power", &uav::multirotor_power, py::arg("state"), py::arg("mass"), py::arg("air"),
          py::arg("params") = uav::MultirotorParams{});

    // payload_power
    py::class_<payload::IrsConfig>(m, "IrsConfig")
        .def(py::init<>())
        .def_readwrite("element_count", &payload::IrsConfig::element_count)
        .def_readwrite("bit_resolution", &payload::IrsConfig::bit_resolution)
        .def_readwrite("shifter_power_w", &payload::IrsConfig::shifter_power_w);

    py::class_<payload::MimoCoefficients>(m, "MimoCoefficients")
        .def(py::init<>())
        .def_static("preset", &payload::mimo_coefficient_preset)
        .def_readwrite("p_syn", &payload::MimoCoefficients::p_syn)
        .def_readwrite("p_ant", &payload::MimoCoefficients::p_ant)
        .def_readwrite("c_ce", &payload::MimoCoefficients::c_ce)
        .def_readwrite("e_cod", &payload::MimoCoefficients::e_cod)
        .def_readwrite("e_dec", &payload::MimoCoefficients::e_dec)
        .def_readwrite("e_bh", &payload::MimoCoefficients::e_bh)
        .def_readwrite("c_sp0", &payload::MimoCoefficients::c_sp0)
        .def_readwrite("c_sp", &payload::MimoCoefficients::c_sp);

    py::class_<payload::MimoConfig>(m, "MimoConfig")
        .def(py::init<>())
        .def_readwrite("antennas", &payload::MimoConfig::antennas)
        .def_readwrite("users", &payload::MimoConfig::users)
        .def_readwrite("tr_ul_mbps", &payload::MimoConfig::tr_ul_mbps)
        .def_readwrite("tr_dl_mbps", &payload::MimoConfig::tr_dl_mbps)
        .def_readwrite("p_fix_w", &payload::MimoConfig::p_fix_w)
        .def_readwrite("p_tx_w", &payload::MimoConfig::p_tx_w)
        .def_readwrite("pa_efficiency", &payload::MimoConfig::pa_efficiency)
        .def_readwrite("coeffs", &payload::MimoConfig::coeffs);

    py::class_<payload::MimoBreakdown>(m, "MimoBreakdown")
        .def_readonly("fixed", &payload::MimoBreakdown::fixed)
        .def_readonly("transceiver_chains", &payload::MimoBreakdown::transceiver_chains)
        .def_readonly("channel_estimation", &payload::MimoBreakdown::channel_estimation)
        .def_readonly("coding_decoding", &payload::MimoBreakdown::coding_decoding)
        .def_readonly("backhaul", &payload::MimoBreakdown::backhaul)
        .def_readonly("signal_processing", &payload::MimoBreakdown::signal_processing)
        .def_readonly("power_amplifier", &payload::MimoBreakdown::power_amplifier)
        .def_readonly("total", &payload::MimoBreakdown::total);

    m.def("irs_power", &payload::irs_power, py::arg("cfg"));
    m.def("mimo_power", &payload::mimo_power, py::arg("cfg"));

    // res_harvest
    py::class_<res::PvConfig>(m, "PvConfig")
        .def(py::init<>())
        .def_readwrite("rated_power_w", &res::PvConfig::rated_power_w)
        .def_readwrite("derating", &res::PvConfig::derating)
        .def_readwrite("temp_coeff_pct_per_c", &res::PvConfig::temp_coeff_pct_per_c)
        .def_readwrite("g_stc_w_m2", &res::PvConfig::g_stc_w_m2)
        .def_readwrite("t_cell_stc_c", &res::PvConfig::t_cell_stc_c);

    py::class_<res::WtConfig>(m, "WtConfig")
        .def(py::init<>())
        .def_readwrite("cut_in_mps", &res::WtConfig::cut_in_mps)
        .def_readwrite("rated_speed_mps", &res::WtConfig::rated_speed_mps)
        .def_readwrite("cut_out_mps", &res::WtConfig::cut_out_mps)
        .def_readwrite("rated_power_w", &res::WtConfig::rated_power_w)
        .def_readwrite("rho_ref", &res::WtConfig::rho_ref)
        .def("set_power_curve",
             [](res::WtConfig& cfg, const std::vector<std::pair<double, double>>& knots) {
                 std::vector<res::CurveKnot> k;
                 for (const auto& [v, p] : knots) k.push_back({v, p});
                 cfg.power_curve = res::PowerCurve(std::move(k));
                 res::validate(cfg);
             });

    m.def("pv_power", &res::pv_power, py::arg("cfg"), py::arg("irradiance_w_m2"), py::arg("cell_temp_c"));
    m.def("wt_power", &res::wt_power, py::arg("cfg"), py::arg("hub_wind_mps"), py::arg("air"));

    // scenario
    py::enum_<Platform>(m, "Platform")
        .value("Multirotor", Platform::Multirotor)
        .value("FixedWing", Platform::FixedWing);
    py::enum_<EquipmentCase>(m, "EquipmentCase")
        .value("NONE", EquipmentCase::None)
        .value("PV_ONLY", EquipmentCase::PvOnly)
        .value("WT_ONLY", EquipmentCase::WtOnly)
        .value("PV_AND_WT", EquipmentCase::PvAndWt);
    py::enum_<Season>(m, "Season")
        .value("VernalEquinox", Season::VernalEquinox)
        .value("SummerSolstice", Season::SummerSolstice)
        .value("AutumnEquinox", Season::AutumnEquinox)
        .value("WinterSolstice", Season::WinterSolstice);

    py::class_<SimulationSetup>(m, "SimulationSetup")
        .def(py::init([](Platform p, EquipmentCase c) { return config::make_setup(config::table1_preset(), p, c); }),
             py::arg("platform") = Platform::Multirotor, py::arg("case") = EquipmentCase::None)
        .def_readwrite("equipment", &SimulationSetup::equipment)
        .def_readwrite("irs", &SimulationSetup::irs)
        .def_readwrite("mimo", &SimulationSetup::mimo)
        .def_readwrite("pv", &SimulationSetup::pv)
        .def_readwrite("wt", &SimulationSetup::wt)
        .def_readwrite("constants", &SimulationSetup::constants)
        .def_property(
            "step_s", [](const SimulationSetup& s) { return s.step.count(); },
            [](SimulationSetup& s, long long v) { s.step = std::chrono::seconds{v}; })
        .def_property(
            "mass", [](const SimulationSetup& s) { return s.platform.mass; },
            [](SimulationSetup& s, const uav::MassBudget& m) { s.platform.mass = m; })
        .def_property(
            "kinematics", [](const SimulationSetup& s) { return s.platform.kinematics; },
            [](SimulationSetup& s, const uav::KinematicState& k) { s.platform.kinematics = k; })
        .def_property(
            "site", [](const SimulationSetup& s) { return s.platform.site; },
            [](SimulationSetup& s, const atmosphere::SiteConfig& site) { s.platform.site = site; });

    py::class_<LedgerRecord>(m, "LedgerRecord")
        .def_property_readonly("timestamp", [](const LedgerRecord& r) { return format_timestamp(r.timestamp); })
        .def_property_readonly("propulsion_w", [](const LedgerRecord& r) { return r.power.propulsion; })
        .def_property_readonly("mimo_w", [](const LedgerRecord& r) { return r.power.mimo; })
        .def_property_readonly("irs_w", [](const LedgerRecord& r) { return r.power.irs; })
        .def_property_readonly("consumption_w", [](const LedgerRecord& r) { return r.power.total_consumption; })
        .def_property_readonly("pv_w", [](const LedgerRecord& r) { return r.harvest.pv; })
        .def_property_readonly("wt_w", [](const LedgerRecord& r) { return r.harvest.wt; })
        .def_property_readonly("harvest_w", [](const LedgerRecord& r) { return r.harvest.total_harvest; })
        .def_readonly("net_w", &LedgerRecord::net_w)
        .def_readonly("cumulative_consumed_wh", &LedgerRecord::cumulative_consumed_wh)
        .def_readonly("cumulative_harvested_wh", &LedgerRecord::cumulative_harvested_wh);

    py::class_<EnergyLedger>(m, "EnergyLedger")
        .def_readonly("records", &EnergyLedger::records)
        .def("__len__", [](const EnergyLedger& l) { return l.records.size(); })
        .def("to_csv", &ledger_to_csv);

    m.def("simulate",
          [](const SimulationSetup& setup, const std::vector<atmosphere::WeatherSample>& weather) {
              return simulate(setup, weather);
          },
          py::arg("setup"), py::arg("weather"));
    m.def("normalize_series", [](const std::vector<double>& v) { return normalize_series(v); }, py::arg("values"));
    m.def("battery_step",
          [](double soc, double net, double dt_s, double cap, double ce, double de) {
              const auto r = battery_step(soc, net, std::chrono::seconds{static_cast<long long>(dt_s)}, cap, ce, de);
              return py::make_tuple(r.soc_wh, r.spilled_wh, r.unmet_wh);
          },
          py::arg("soc_wh"), py::arg("net_power_w"), py::arg("dt_s"), py::arg("capacity_wh"),
          py::arg("charge_eff") = 1.0, py::arg("discharge_eff") = 1.0);

    m.def("parse_weather_csv",
          [](const std::filesystem::path& p) { return io::parse_weather_csv(p); }, py::arg("path"));
    m.def("presets_json", &cli::presets_json);
}
