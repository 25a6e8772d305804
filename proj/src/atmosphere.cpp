#include "uavbs/atmosphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs::atmosphere {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void require(bool ok, const char* what) {
    if (!ok) throw ModelPreconditionError(what);
}

}  // namespace

void validate(const WeatherSample& s) {
    require(std::isfinite(s.ambient_temp_c) && std::isfinite(s.pressure_pa) &&
                std::isfinite(s.rel_humidity) && std::isfinite(s.wind_speed_ref_mps) &&
                std::isfinite(s.cloud_opacity),
            "weather sample has a non-finite field");
    require(s.ambient_temp_c > -kKelvinOffset, "ambient temperature below absolute zero");
    require(s.pressure_pa > 0.0, "pressure must be > 0");
    require(s.rel_humidity >= 0.0 && s.rel_humidity <= 1.0, "rel_humidity must be in [0,1]");
    require(s.wind_speed_ref_mps >= 0.0, "wind speed must be >= 0");
    require(s.cloud_opacity >= 0.0 && s.cloud_opacity <= 1.0, "cloud_opacity must be in [0,1]");
}

void validate(const SiteConfig& site) {
    require(std::isfinite(site.latitude_deg) && std::isfinite(site.longitude_deg) &&
                std::isfinite(site.altitude_agl_m) && std::isfinite(site.ref_height_m) &&
                std::isfinite(site.roughness_length_m),
            "site has a non-finite field");
    require(std::abs(site.latitude_deg) <= 90.0, "|latitude| must be <= 90");
    require(site.altitude_agl_m > 0.0, "altitude_agl must be > 0");
    require(site.ref_height_m > 0.0, "ref_height must be > 0");
    require(site.roughness_length_m > 0.0, "roughness_length must be > 0");
}

double saturation_vapor_pressure(double temp_c) {
    return 611.2 * std::exp(17.62 * temp_c / (243.12 + temp_c));
}

AirState air_density(const WeatherSample& sample, const Constants& k) {
    validate(sample);
    const double t_k = sample.ambient_temp_c + kKelvinOffset;
    const double p_vapor = sample.rel_humidity * saturation_vapor_pressure(sample.ambient_temp_c);
    require(p_vapor < sample.pressure_pa, "vapour pressure exceeds total pressure");
    const double p_dry = sample.pressure_pa - p_vapor;
    return {p_dry / (k.r_dry * t_k) + p_vapor / (k.r_vapor * t_k), t_k};
}

double wind_at_height(const WeatherSample& sample, const SiteConfig& site) {
    validate(sample);
    validate(site);
    const double z0 = site.roughness_length_m;
    if (site.altitude_agl_m <= z0 || site.ref_height_m <= z0) {
        throw ModelPreconditionError("log wind profile needs heights above the roughness length");
    }
    if (site.altitude_agl_m == site.ref_height_m) return sample.wind_speed_ref_mps;
    return sample.wind_speed_ref_mps * std::log(site.altitude_agl_m / z0) /
           std::log(site.ref_height_m / z0);
}

double solar_elevation_deg(const Timestamp& ts, double latitude_deg, double longitude_deg) {
    using namespace std::chrono;
    const auto day_start = floor<days>(ts.utc);
    const year_month_day date{day_start};
    const auto jan1 = sys_days{date.year() / January / 1};
    const double day_of_year = static_cast<double>((day_start - jan1).count()) + 1.0;
    const double utc_minutes = duration<double, std::ratio<60>>(ts.utc - day_start).count();
    const double year_days = date.year().is_leap() ? 366.0 : 365.0;

    // Fractional year (rad), Spencer series for declination and equation of time.
    const double gamma = 2.0 * std::numbers::pi / year_days *
                         (day_of_year - 1.0 + (utc_minutes / 60.0 - 12.0) / 24.0);
    const double eq_time_min =
        229.18 * (0.000075 + 0.001868 * std::cos(gamma) - 0.032077 * std::sin(gamma) -
                  0.014615 * std::cos(2 * gamma) - 0.040849 * std::sin(2 * gamma));
    const double decl = 0.006918 - 0.399912 * std::cos(gamma) + 0.070257 * std::sin(gamma) -
                        0.006758 * std::cos(2 * gamma) + 0.000907 * std::sin(2 * gamma) -
                        0.002697 * std::cos(3 * gamma) + 0.00148 * std::sin(3 * gamma);

    const double true_solar_min = utc_minutes + eq_time_min + 4.0 * longitude_deg;
    const double hour_angle = (true_solar_min / 4.0 - 180.0) * kDeg;
    const double lat = latitude_deg * kDeg;

    const double sin_el = std::sin(lat) * std::sin(decl) +
                          std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
    return std::asin(std::clamp(sin_el, -1.0, 1.0)) / kDeg;
}

double clear_sky_irradiance(double elevation_deg) {
    if (!(elevation_deg > 0.0)) return 0.0;
    const double sin_el = std::sin(elevation_deg * kDeg);
    // Kasten-Young relative air mass; stays finite at the horizon.
    const double air_mass = 1.0 / (sin_el + 0.50572 * std::pow(elevation_deg + 6.07995, -1.6364));
    const double g = kSolarConstant * std::pow(0.7, std::pow(air_mass, 0.678)) * sin_el;
    return std::clamp(g, 0.0, kSolarConstant);
}

double solar_irradiance(const WeatherSample& sample, const SiteConfig& site, const Constants& k) {
    validate(sample);
    validate(site);
    require(k.cloud_attenuation >= 0.0 && k.cloud_attenuation <= 1.0,
            "cloud_attenuation must be in [0,1]");
    const double el = solar_elevation_deg(sample.timestamp, site.latitude_deg, site.longitude_deg);
    return clear_sky_irradiance(el) * (1.0 - k.cloud_attenuation * sample.cloud_opacity);
}

double pv_cell_temperature(const WeatherSample& sample, double irradiance_w_m2,
                           const Constants& k) {
    require(irradiance_w_m2 >= 0.0, "irradiance must be >= 0");
    return sample.ambient_temp_c + irradiance_w_m2 * (k.noct_c - 20.0) / 800.0;
}

}  // namespace uavbs::atmosphere
