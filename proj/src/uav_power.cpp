#include "uavbs/uav_power.hpp"

#include <cmath>
#include <numbers>

#include "uavbs/error.hpp"

namespace uavbs::uav {
namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ModelPreconditionError(what);
}

void check_air(const atmosphere::AirState& air) {
    require(std::isfinite(air.density_kg_m3) && air.density_kg_m3 > 0.0,
            "air density must be finite and > 0");
}

}  // namespace

double MassBudget::total_mass() const {
    return m_uav + m_batt + m_rf + m_irs + m_pkg + (pv_fitted ? m_pv : 0.0) +
           (wt_fitted ? m_wt : 0.0);
}

void validate(const MassBudget& m) {
    for (double v : {m.m_uav, m.m_batt, m.m_rf, m.m_irs, m.m_pv, m.m_wt, m.m_pkg}) {
        require(std::isfinite(v) && v >= 0.0, "component masses must be finite and >= 0");
    }
    require(m.total_mass() > 0.0, "total mass must be > 0");
}

void validate(const FixedWingParams& p) {
    require(p.c_d0 > 0.0 && p.aspect_ratio > 0.0 && p.wing_area_m2 > 0.0 && p.g > 0.0,
            "fixed-wing parameters must be > 0");
    require(p.e0 > 0.0 && p.e0 <= 1.0, "Oswald efficiency must be in (0,1]");
}

void validate(const MultirotorParams& p) {
    require(p.profile_drag > 0.0 && p.induced_correction > 0.0 && p.thrust_to_weight > 0.0 &&
                p.fuselage_drag_ratio > 0.0 && p.rotor_area_m2 > 0.0 && p.rotor_radius_m > 0.0 &&
                p.rotor_solidity > 0.0 && p.g > 0.0,
            "multirotor parameters must be > 0");
    require(p.rotor_count >= 1, "rotor_count must be >= 1");
}

FixedWingCoefficients fixed_wing_coefficients(double total_mass_kg, double air_density,
                                              const FixedWingParams& p) {
    const double weight = total_mass_kg * p.g;
    return {0.5 * air_density * p.c_d0 * p.wing_area_m2,
            2.0 * weight * weight /
                (std::numbers::pi * p.e0 * p.aspect_ratio * air_density * p.wing_area_m2)};
}

double fixed_wing_min_power_speed(const MassBudget& mass, const atmosphere::AirState& air,
                                  const FixedWingParams& params) {
    validate(mass);
    validate(params);
    check_air(air);
    const auto c = fixed_wing_coefficients(mass.total_mass(), air.density_kg_m3, params);
    return std::pow(c.c2 / (3.0 * c.c1), 0.25);
}

double fixed_wing_power(const KinematicState& state, const MassBudget& mass,
                        const atmosphere::AirState& air, const FixedWingParams& params) {
    validate(mass);
    validate(params);
    check_air(air);
    require(std::isfinite(state.velocity_mps) && state.velocity_mps >= 0.0,
            "velocity must be finite and >= 0");
    if (state.velocity_mps == 0.0) throw FixedWingHoverError();

    const double m_all = mass.total_mass();
    const double v = state.velocity_mps;
    const auto c = fixed_wing_coefficients(m_all, air.density_kg_m3, params);
    const double turn = state.accel_centripetal_mps2 / params.g;
    return std::abs(c.c1 * v * v * v + (c.c2 / v) * (1.0 + turn * turn) +
                    m_all * state.accel_forward_mps2 * v);
}

double blade_profile_power(const KinematicState& state, const atmosphere::AirState& air,
                           const MultirotorParams& p) {
    const double omega_r = state.rotor_angular_velocity_rad_s * p.rotor_radius_m;
    return p.profile_drag / 8.0 * air.density_kg_m3 * p.rotor_count * p.rotor_solidity *
           p.rotor_area_m2 * omega_r * omega_r * omega_r;
}

double induced_power(const MassBudget& mass, const atmosphere::AirState& air,
                     const MultirotorParams& p) {
    const double weight = mass.total_mass() * p.g;
    const double ratio =
        weight * weight * weight / (2.0 * air.density_kg_m3 * p.rotor_count * p.rotor_area_m2);
    const double core = p.induced_form == InducedPowerForm::SquareRoot ? std::sqrt(ratio) : ratio;
    return (1.0 + p.induced_correction) * core;
}

double hover_induced_velocity(const MassBudget& mass, const atmosphere::AirState& air,
                              const MultirotorParams& p) {
    const double weight = mass.total_mass() * p.g;
    return std::sqrt(weight / (2.0 * air.density_kg_m3 * p.rotor_area_m2));
}

double multirotor_power(const KinematicState& state, const MassBudget& mass,
                        const atmosphere::AirState& air, const MultirotorParams& p) {
    validate(mass);
    validate(p);
    check_air(air);
    require(std::isfinite(state.rotor_angular_velocity_rad_s) &&
                state.rotor_angular_velocity_rad_s > 0.0,
            "rotor angular velocity must be > 0");
    require(std::isfinite(state.velocity_mps) && state.velocity_mps >= 0.0,
            "velocity must be finite and >= 0");

    const double rho = air.density_kg_m3;
    const double v = state.velocity_mps;
    const double v2 = v * v;
    const double omega_r = state.rotor_angular_velocity_rad_s * p.rotor_radius_m;
    const double kappa = p.thrust_to_weight;

    const double parasite =
        p.fuselage_drag_ratio / 2.0 * rho * p.rotor_count * p.rotor_solidity * p.rotor_area_m2 * v2 * v;
    const double profile = blade_profile_power(state, air, p) * (1.0 + 3.0 * v2 / (omega_r * omega_r));

    // sqrt(kappa + x^2) - x in conjugate form, x = v^2 / (2 v0^2).
    const double v0 = hover_induced_velocity(mass, air, p);
    const double x = v2 / (2.0 * v0 * v0);
    const double inner = kappa / (std::sqrt(kappa + x * x) + x);
    const double induced = induced_power(mass, air, p) * kappa * std::sqrt(inner);

    return parasite + profile + induced;
}

double propulsion_power(const AirframeParams& airframe, const KinematicState& state,
                        const MassBudget& mass, const atmosphere::AirState& air) {
    return std::visit(
        [&](const auto& params) -> double {
            using T = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<T, MultirotorParams>) {
                return multirotor_power(state, mass, air, params);
            } else {
                return fixed_wing_power(state, mass, air, params);
            }
        },
        airframe);
}

}  // namespace uavbs::uav
