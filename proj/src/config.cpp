#include "uavbs/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "uavbs/error.hpp"
#include "uavbs/io.hpp"

namespace uavbs::config {
namespace {

using nlohmann::json;

// Reads keys out of one JSON object and complains about anything left over.
class Section {
public:
    Section(const json& doc, std::string name) : name_(std::move(name)) {
        if (!doc.is_object()) throw ConfigError("'" + name_ + "' must be an object");
        doc_ = &doc;
    }

    bool has(const std::string& key) const { return doc_->contains(key); }

    const json* raw(const std::string& key) {
        seen_.insert(key);
        auto it = doc_->find(key);
        return it == doc_->end() ? nullptr : &*it;
    }

    template <typename T>
    void read(const std::string& key, T& target) {
        const json* v = raw(key);
        if (!v) return;
        try {
            if constexpr (std::is_same_v<T, double>) {
                if (!v->is_number()) throw ConfigError("");
            } else if constexpr (std::is_same_v<T, int>) {
                if (!v->is_number_integer()) throw ConfigError("");
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!v->is_boolean()) throw ConfigError("");
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!v->is_string()) throw ConfigError("");
            }
            target = v->get<T>();
        } catch (const std::exception&) {
            throw ConfigError("'" + name_ + "." + key + "' has the wrong type");
        }
    }

    void finish() const {
        for (const auto& [key, _] : doc_->items()) {
            if (!seen_.contains(key)) throw ConfigError("unknown key '" + name_ + "." + key + "'");
        }
    }

    const std::string& name() const { return name_; }

private:
    const json* doc_ = nullptr;
    std::string name_;
    std::set<std::string> seen_;
};

template <typename Enum, typename Parse>
std::vector<Enum> read_enum_list(Section& sec, const std::string& key, Parse parse,
                                 std::vector<Enum> fallback) {
    const json* v = sec.raw(key);
    if (!v) return fallback;
    if (!v->is_array()) throw ConfigError("'" + sec.name() + "." + key + "' must be an array");
    std::vector<Enum> out;
    for (const auto& item : *v) {
        if (!item.is_string()) throw ConfigError("'" + sec.name() + "." + key + "' holds strings");
        out.push_back(parse(item.get<std::string>()));
    }
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
}

void read_site(Section s, atmosphere::SiteConfig& site) {
    s.read("latitude_deg", site.latitude_deg);
    s.read("longitude_deg", site.longitude_deg);
    s.read("altitude_agl_m", site.altitude_agl_m);
    s.read("ref_height_m", site.ref_height_m);
    s.read("roughness_length_m", site.roughness_length_m);
    s.finish();
}

void read_constants(Section s, atmosphere::Constants& k) {
    s.read("r_dry", k.r_dry);
    s.read("r_vapor", k.r_vapor);
    s.read("noct_c", k.noct_c);
    s.read("cloud_attenuation", k.cloud_attenuation);
    s.finish();
}

void read_masses(Section s, uav::MassBudget& m) {
    s.read("m_uav", m.m_uav);
    s.read("m_batt", m.m_batt);
    s.read("m_rf", m.m_rf);
    s.read("m_irs", m.m_irs);
    s.read("m_pv", m.m_pv);
    s.read("m_wt", m.m_wt);
    s.read("m_pkg", m.m_pkg);
    s.finish();
}

void read_multirotor(Section s, uav::MultirotorParams& p, uav::KinematicState& kin) {
    s.read("profile_drag", p.profile_drag);
    s.read("induced_correction", p.induced_correction);
    s.read("thrust_to_weight", p.thrust_to_weight);
    s.read("fuselage_drag_ratio", p.fuselage_drag_ratio);
    s.read("rotor_area_m2", p.rotor_area_m2);
    s.read("rotor_radius_m", p.rotor_radius_m);
    s.read("rotor_solidity", p.rotor_solidity);
    s.read("rotor_count", p.rotor_count);
    s.read("g", p.g);
    std::string form;
    s.read("induced_power_form", form);
    if (form == "sqrt") {
        p.induced_form = uav::InducedPowerForm::SquareRoot;
    } else if (form == "as-printed") {
        p.induced_form = uav::InducedPowerForm::AsPrinted;
    } else if (!form.empty()) {
        throw ConfigError("'multirotor.induced_power_form' must be \"sqrt\" or \"as-printed\"");
    }
    s.read("velocity_mps", kin.velocity_mps);
    s.read("rotor_angular_velocity_rad_s", kin.rotor_angular_velocity_rad_s);
    s.finish();
}

void read_fixed_wing(Section s, uav::FixedWingParams& p, uav::KinematicState& kin) {
    s.read("c_d0", p.c_d0);
    s.read("e0", p.e0);
    s.read("aspect_ratio", p.aspect_ratio);
    s.read("wing_area_m2", p.wing_area_m2);
    s.read("g", p.g);
    s.read("velocity_mps", kin.velocity_mps);
    s.read("accel_forward_mps2", kin.accel_forward_mps2);
    s.read("accel_centripetal_mps2", kin.accel_centripetal_mps2);
    s.finish();
}

void read_irs(Section s, payload::IrsConfig& irs) {
    s.read("element_count", irs.element_count);
    s.read("bit_resolution", irs.bit_resolution);
    if (const json* table = s.raw("shifter_power_w")) {
        if (!table->is_object()) throw ConfigError("'irs.shifter_power_w' must be an object");
        irs.shifter_power_w.clear();
        for (const auto& [bits_text, watts] : table->items()) {
            int bits = 0;
            auto [ptr, ec] = std::from_chars(bits_text.data(), bits_text.data() + bits_text.size(), bits);
            if (ec != std::errc{} || ptr != bits_text.data() + bits_text.size() || !watts.is_number()) {
                throw ConfigError("'irs.shifter_power_w' maps integer bit counts to watts");
            }
            irs.shifter_power_w[bits] = watts.get<double>();
        }
    }
    s.finish();
}

void read_mimo(Section s, payload::MimoConfig& m, std::string& preset) {
    s.read("antennas", m.antennas);
    s.read("users", m.users);
    s.read("tr_ul_mbps", m.tr_ul_mbps);
    s.read("tr_dl_mbps", m.tr_dl_mbps);
    s.read("p_fix_w", m.p_fix_w);
    s.read("p_tx_w", m.p_tx_w);
    s.read("pa_efficiency", m.pa_efficiency);
    s.read("coefficient_preset", preset);
    m.coeffs = payload::mimo_coefficient_preset(preset);
    if (const json* c = s.raw("coefficients")) {
        Section cs(*c, "mimo.coefficients");
        auto& k = m.coeffs;
        cs.read("p_syn", k.p_syn);
        cs.read("p_ant", k.p_ant);
        cs.read("c_ce", k.c_ce);
        cs.read("e_cod", k.e_cod);
        cs.read("e_dec", k.e_dec);
        cs.read("e_bh", k.e_bh);
        cs.read("c_sp0", k.c_sp0);
        cs.read("c_sp", k.c_sp);
        cs.finish();
    }
    s.finish();
}

void read_pv(Section s, res::PvConfig& pv) {
    s.read("rated_power_w", pv.rated_power_w);
    s.read("derating", pv.derating);
    s.read("temp_coeff_pct_per_c", pv.temp_coeff_pct_per_c);
    s.read("g_stc_w_m2", pv.g_stc_w_m2);
    s.read("t_cell_stc_c", pv.t_cell_stc_c);
    s.finish();
}

void read_wt(Section s, res::WtConfig& wt, const std::filesystem::path& base) {
    s.read("cut_in_mps", wt.cut_in_mps);
    s.read("rated_speed_mps", wt.rated_speed_mps);
    s.read("cut_out_mps", wt.cut_out_mps);
    s.read("rated_power_w", wt.rated_power_w);
    s.read("rho_ref", wt.rho_ref);
    const json* inline_curve = s.raw("power_curve");
    const json* curve_file = s.raw("power_curve_file");
    if (inline_curve && curve_file) {
        throw ConfigError("give either 'wt.power_curve' or 'wt.power_curve_file', not both");
    }
    if (inline_curve) {
        if (!inline_curve->is_array()) throw ConfigError("'wt.power_curve' must be an array");
        std::vector<res::CurveKnot> knots;
        for (const auto& k : *inline_curve) {
            if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
                throw ConfigError("'wt.power_curve' entries are [wind_speed_mps, normalized_power]");
            }
            knots.push_back({k[0].get<double>(), k[1].get<double>()});
        }
        wt.power_curve = res::PowerCurve(std::move(knots));
    } else if (curve_file) {
        if (!curve_file->is_string()) throw ConfigError("'wt.power_curve_file' must be a path");
        wt.power_curve = load_power_curve_csv(resolve(base, curve_file->get<std::string>()));
    }
    s.finish();
}

void read_battery(Section s, std::optional<BatteryConfig>& out) {
    bool enabled = true;  // a battery section switches the ledger on unless disabled
    BatteryConfig b;
    s.read("enabled", enabled);
    s.read("capacity_wh", b.capacity_wh);
    s.read("initial_soc_wh", b.initial_soc_wh);
    s.read("charge_efficiency", b.charge_efficiency);
    s.read("discharge_efficiency", b.discharge_efficiency);
    s.finish();
    out = enabled ? std::optional<BatteryConfig>(b) : std::nullopt;
}

void read_run(Section s, RunGrid& run, const std::filesystem::path& base) {
    if (const json* step = s.raw("step")) {
        if (step->is_number_integer()) {
            run.step = std::chrono::seconds{step->get<long long>()};
        } else if (step->is_string()) {
            run.step = parse_step(step->get<std::string>());
        } else {
            throw ConfigError("'run.step' must be seconds or a string like \"1h\"");
        }
        if (run.step.count() <= 0) throw ConfigError("'run.step' must be > 0");
    }
    run.platforms = read_enum_list<Platform>(s, "platforms", parse_platform, run.platforms);
    run.cases = read_enum_list<EquipmentCase>(s, "cases", parse_case, run.cases);
    run.seasons = read_enum_list<Season>(s, "seasons", parse_season, run.seasons);
    if (const json* w = s.raw("weather")) {
        if (!w->is_object()) throw ConfigError("'run.weather' maps season names to CSV paths");
        for (const auto& [season, path] : w->items()) {
            if (!path.is_string()) throw ConfigError("'run.weather." + season + "' must be a path");
            run.weather[parse_season(season)] = resolve(base, path.get<std::string>());
        }
    }
    s.finish();
}

}  // namespace

ScenarioConfig table1_preset() { return ScenarioConfig{}; }

std::chrono::seconds parse_step(const std::string& text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || value <= 0) throw ConfigError("bad time step '" + text + "'");
    const std::string_view unit(ptr, static_cast<std::size_t>(last - ptr));
    if (unit.empty() || unit == "s") return std::chrono::seconds{value};
    if (unit == "min" || unit == "m") return std::chrono::minutes{value};
    if (unit == "h") return std::chrono::hours{value};
    throw ConfigError("bad time step unit in '" + text + "' (use s, min or h)");
}

ScenarioConfig parse_scenario(const nlohmann::json& doc, const std::filesystem::path& base_dir) {
    Section top(doc, "scenario");
    std::string preset = "table1";
    top.read("preset", preset);
    if (preset != "table1") throw ConfigError("unknown scenario preset '" + preset + "'");

    ScenarioConfig cfg = table1_preset();
    if (const json* v = top.raw("site")) read_site(Section(*v, "site"), cfg.site);
    if (const json* v = top.raw("atmosphere")) read_constants(Section(*v, "atmosphere"), cfg.constants);
    if (const json* v = top.raw("masses")) read_masses(Section(*v, "masses"), cfg.mass);
    if (const json* v = top.raw("multirotor")) {
        read_multirotor(Section(*v, "multirotor"), cfg.multirotor, cfg.multirotor_kinematics);
    }
    if (const json* v = top.raw("fixed_wing")) {
        read_fixed_wing(Section(*v, "fixed_wing"), cfg.fixed_wing, cfg.fixed_wing_kinematics);
    }
    if (const json* v = top.raw("irs")) read_irs(Section(*v, "irs"), cfg.irs);
    if (const json* v = top.raw("mimo")) read_mimo(Section(*v, "mimo"), cfg.mimo, cfg.mimo_coefficient_preset);
    if (const json* v = top.raw("pv")) read_pv(Section(*v, "pv"), cfg.pv);
    if (const json* v = top.raw("wt")) read_wt(Section(*v, "wt"), cfg.wt, base_dir);
    if (const json* v = top.raw("battery")) read_battery(Section(*v, "battery"), cfg.battery);
    if (const json* v = top.raw("run")) read_run(Section(*v, "run"), cfg.run, base_dir);
    top.finish();

    // Catch model-level inconsistencies at load time rather than mid-run.
    try {
        atmosphere::validate(cfg.site);
        uav::validate(cfg.mass);
        uav::validate(cfg.multirotor);
        uav::validate(cfg.fixed_wing);
        payload::validate(cfg.irs);
        payload::validate(cfg.mimo);
    } catch (const ModelPreconditionError& e) {
        throw ConfigError(e.what());
    }
    res::validate(cfg.pv);
    res::validate(cfg.wt);
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_scenario(doc, path.parent_path());
}

res::PowerCurve load_power_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open power curve file " + path.string());
    std::string line;
    if (!std::getline(in, line) || io::strip_cr(line) != "wind_speed_mps,normalized_power") {
        throw ConfigError(path.string() + ":1: expected header 'wind_speed_mps,normalized_power'");
    }
    std::vector<res::CurveKnot> knots;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = io::strip_cr(line);
        if (line.empty()) continue;
        const auto fields = io::split_csv_line(line);
        if (fields.size() != 2) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected 2 fields");
        }
        double speed = 0.0;
        double value = 0.0;
        if (!io::parse_double(fields[0], speed) || !io::parse_double(fields[1], value)) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unparseable number");
        }
        knots.push_back({speed, value});
    }
    return res::PowerCurve(std::move(knots));
}

nlohmann::ordered_json to_json(const ScenarioConfig& cfg) {
    nlohmann::ordered_json j;
    j["preset"] = "table1";
    j["site"] = {{"latitude_deg", cfg.site.latitude_deg},
                 {"longitude_deg", cfg.site.longitude_deg},
                 {"altitude_agl_m", cfg.site.altitude_agl_m},
                 {"ref_height_m", cfg.site.ref_height_m},
                 {"roughness_length_m", cfg.site.roughness_length_m}};
    j["atmosphere"] = {{"r_dry", cfg.constants.r_dry},
                       {"r_vapor", cfg.constants.r_vapor},
                       {"noct_c", cfg.constants.noct_c},
                       {"cloud_attenuation", cfg.constants.cloud_attenuation}};
    const auto& m = cfg.mass;
    j["masses"] = {{"m_uav", m.m_uav}, {"m_batt", m.m_batt}, {"m_rf", m.m_rf}, {"m_irs", m.m_irs},
                   {"m_pv", m.m_pv},   {"m_wt", m.m_wt},     {"m_pkg", m.m_pkg}};
    const auto& mr = cfg.multirotor;
    j["multirotor"] = {
        {"profile_drag", mr.profile_drag},
        {"induced_correction", mr.induced_correction},
        {"thrust_to_weight", mr.thrust_to_weight},
        {"fuselage_drag_ratio", mr.fuselage_drag_ratio},
        {"rotor_area_m2", mr.rotor_area_m2},
        {"rotor_radius_m", mr.rotor_radius_m},
        {"rotor_solidity", mr.rotor_solidity},
        {"rotor_count", mr.rotor_count},
        {"g", mr.g},
        {"induced_power_form",
         mr.induced_form == uav::InducedPowerForm::SquareRoot ? "sqrt" : "as-printed"},
        {"velocity_mps", cfg.multirotor_kinematics.velocity_mps},
        {"rotor_angular_velocity_rad_s", cfg.multirotor_kinematics.rotor_angular_velocity_rad_s}};
    const auto& fw = cfg.fixed_wing;
    j["fixed_wing"] = {{"c_d0", fw.c_d0},
                       {"e0", fw.e0},
                       {"aspect_ratio", fw.aspect_ratio},
                       {"wing_area_m2", fw.wing_area_m2},
                       {"g", fw.g},
                       {"velocity_mps", cfg.fixed_wing_kinematics.velocity_mps},
                       {"accel_forward_mps2", cfg.fixed_wing_kinematics.accel_forward_mps2},
                       {"accel_centripetal_mps2", cfg.fixed_wing_kinematics.accel_centripetal_mps2}};
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [bits, watts] : cfg.irs.shifter_power_w) table[std::to_string(bits)] = watts;
    j["irs"] = {{"element_count", cfg.irs.element_count},
                {"bit_resolution", cfg.irs.bit_resolution},
                {"shifter_power_w", table}};
    const auto& mi = cfg.mimo;
    const auto& c = mi.coeffs;
    j["mimo"] = {{"antennas", mi.antennas},
                 {"users", mi.users},
                 {"tr_ul_mbps", mi.tr_ul_mbps},
                 {"tr_dl_mbps", mi.tr_dl_mbps},
                 {"p_fix_w", mi.p_fix_w},
                 {"p_tx_w", mi.p_tx_w},
                 {"pa_efficiency", mi.pa_efficiency},
                 {"coefficient_preset", cfg.mimo_coefficient_preset},
                 {"coefficients",
                  {{"p_syn", c.p_syn},
                   {"p_ant", c.p_ant},
                   {"c_ce", c.c_ce},
                   {"e_cod", c.e_cod},
                   {"e_dec", c.e_dec},
                   {"e_bh", c.e_bh},
                   {"c_sp0", c.c_sp0},
                   {"c_sp", c.c_sp}}}};
    j["pv"] = {{"rated_power_w", cfg.pv.rated_power_w},
               {"derating", cfg.pv.derating},
               {"temp_coeff_pct_per_c", cfg.pv.temp_coeff_pct_per_c},
               {"g_stc_w_m2", cfg.pv.g_stc_w_m2},
               {"t_cell_stc_c", cfg.pv.t_cell_stc_c}};
    nlohmann::ordered_json curve = nlohmann::ordered_json::array();
    for (const auto& k : cfg.wt.power_curve.knots()) curve.push_back({k.wind_speed_mps, k.normalized_power});
    j["wt"] = {{"cut_in_mps", cfg.wt.cut_in_mps},
               {"rated_speed_mps", cfg.wt.rated_speed_mps},
               {"cut_out_mps", cfg.wt.cut_out_mps},
               {"rated_power_w", cfg.wt.rated_power_w},
               {"rho_ref", cfg.wt.rho_ref},
               {"power_curve", curve}};
    const BatteryConfig b = cfg.battery.value_or(BatteryConfig{});
    j["battery"] = {{"enabled", cfg.battery.has_value()},
                    {"capacity_wh", b.capacity_wh},
                    {"initial_soc_wh", b.initial_soc_wh},
                    {"charge_efficiency", b.charge_efficiency},
                    {"discharge_efficiency", b.discharge_efficiency}};
    nlohmann::ordered_json run;
    run["step"] = cfg.run.step.count();
    run["platforms"] = nlohmann::ordered_json::array();
    for (auto p : cfg.run.platforms) run["platforms"].push_back(to_string(p));
    run["cases"] = nlohmann::ordered_json::array();
    for (auto c2 : cfg.run.cases) run["cases"].push_back(to_string(c2));
    run["seasons"] = nlohmann::ordered_json::array();
    for (auto s : cfg.run.seasons) run["seasons"].push_back(to_string(s));
    run["weather"] = nlohmann::ordered_json::object();
    for (const auto& [s, p] : cfg.run.weather) run["weather"][std::string(to_string(s))] = p.string();
    j["run"] = run;
    return j;
}

SimulationSetup make_setup(const ScenarioConfig& cfg, Platform platform, EquipmentCase equipment) {
    SimulationSetup s;
    if (platform == Platform::Multirotor) {
        s.platform.airframe = cfg.multirotor;
        s.platform.kinematics = cfg.multirotor_kinematics;
    } else {
        s.platform.airframe = cfg.fixed_wing;
        s.platform.kinematics = cfg.fixed_wing_kinematics;
    }
    s.platform.mass = cfg.mass;
    s.platform.site = cfg.site;
    s.equipment = equipment;
    s.irs = cfg.irs;
    s.mimo = cfg.mimo;
    s.pv = cfg.pv;
    s.wt = cfg.wt;
    s.constants = cfg.constants;
    s.step = cfg.run.step;
    s.battery = cfg.battery;
    return s;
}

}  // namespace uavbs::config
