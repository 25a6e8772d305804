#pragma once

#include "uavbs/timestamp.hpp"

namespace uavbs::atmosphere {

inline constexpr double kSolarConstant = 1367.0;  // W/m^2
inline constexpr double kKelvinOffset = 273.15;

/// One timestamped record of ambient conditions.
struct WeatherSample {
    Timestamp timestamp;
    double ambient_temp_c = 15.0;
    double pressure_pa = 101325.0;   // station level
    double rel_humidity = 0.0;       // [0, 1]
    double wind_speed_ref_mps = 0.0; // at SiteConfig::ref_height_m
    double cloud_opacity = 0.0;      // 0 clear, 1 fully opaque

    friend bool operator==(const WeatherSample&, const WeatherSample&) = default;
};

struct SiteConfig {
    double latitude_deg = 52.4064;
    double longitude_deg = 16.9252;
    double altitude_agl_m = 100.0;
    double ref_height_m = 10.0;
    double roughness_length_m = 0.1;
};

/// Tunable physical constants. All of them are surfaced in the scenario file.
struct Constants {
    double r_dry = 287.058;   // J/(kg K)
    double r_vapor = 461.495; // J/(kg K)
    double noct_c = 47.0;
    double cloud_attenuation = 0.75;
};

struct AirState {
    double density_kg_m3 = 0.0;
    double temperature_k = 0.0;
};

/// Throws ModelPreconditionError if the sample breaks its invariants or
/// carries a non-finite field.
void validate(const WeatherSample& sample);
void validate(const SiteConfig& site);

/// Saturation vapour pressure over water (Magnus), Pa.
double saturation_vapor_pressure(double temp_c);

/// Moist-air density: dry and vapour partial pressures through the ideal gas law.
AirState air_density(const WeatherSample& sample, const Constants& k = {});

/// Log-law shear from the anemometer height to the operating altitude.
double wind_at_height(const WeatherSample& sample, const SiteConfig& site);

/// Solar elevation above the horizon in degrees, from declination, equation
/// of time and hour angle evaluated in true solar time.
double solar_elevation_deg(const Timestamp& ts, double latitude_deg, double longitude_deg);

/// Clear-sky global horizontal irradiance for a given elevation (W/m^2).
double clear_sky_irradiance(double elevation_deg);

/// Plane-of-array irradiance on the (horizontal) panel, cloud-attenuated.
double solar_irradiance(const WeatherSample& sample, const SiteConfig& site,
                        const Constants& k = {});

/// NOCT cell-temperature model, degrees C.
double pv_cell_temperature(const WeatherSample& sample, double irradiance_w_m2,
                           const Constants& k = {});

}  // namespace uavbs::atmosphere
