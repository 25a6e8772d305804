#pragma once

#include <variant>

#include "uavbs/atmosphere.hpp"

namespace uavbs::uav {

/// Component masses in kg. The RES generators only count when fitted.
struct MassBudget {
    double m_uav = 5.0;
    double m_batt = 0.94;
    double m_rf = 2.0;
    double m_irs = 1.0;
    double m_pv = 2.78;
    double m_wt = 6.0;
    double m_pkg = 0.0;
    bool pv_fitted = false;
    bool wt_fitted = false;

    double total_mass() const;
};

void validate(const MassBudget& mass);

struct KinematicState {
    double velocity_mps = 0.0;
    double accel_forward_mps2 = 0.0;
    double accel_centripetal_mps2 = 0.0;
    double rotor_angular_velocity_rad_s = 300.0;
};

struct FixedWingParams {
    double c_d0 = 0.01;
    double e0 = 0.85;
    double aspect_ratio = 118.81;
    double wing_area_m2 = 1.0;
    double g = 9.81;
};

/// How the hover induced power is evaluated. The printed form W^3/(2 rho n A)
/// is not a power dimensionally; it is kept only so the two can be compared.
enum class InducedPowerForm { SquareRoot, AsPrinted };

struct MultirotorParams {
    double profile_drag = 0.012;
    double induced_correction = 0.1;
    double thrust_to_weight = 1.0;
    double fuselage_drag_ratio = 14.52;
    double rotor_area_m2 = 0.071;
    double rotor_radius_m = 0.15;
    double rotor_solidity = 0.067;
    int rotor_count = 8;
    double g = 9.81;
    InducedPowerForm induced_form = InducedPowerForm::SquareRoot;
};

void validate(const FixedWingParams& p);
void validate(const MultirotorParams& p);

struct FixedWingCoefficients {
    double c1 = 0.0;  // parasitic, W s^3/m^3
    double c2 = 0.0;  // induced, W m/s
};

FixedWingCoefficients fixed_wing_coefficients(double total_mass_kg, double air_density,
                                              const FixedWingParams& params);

/// Level-flight speed minimising fixed-wing power, (c2 / 3 c1)^(1/4).
double fixed_wing_min_power_speed(const MassBudget& mass, const atmosphere::AirState& air,
                                  const FixedWingParams& params);

/// Throws FixedWingHoverError when velocity is zero.
double fixed_wing_power(const KinematicState& state, const MassBudget& mass,
                        const atmosphere::AirState& air, const FixedWingParams& params);

/// Blade-profile power in hover, W.
double blade_profile_power(const KinematicState& state, const atmosphere::AirState& air,
                           const MultirotorParams& params);

/// Hover induced power, W.
double induced_power(const MassBudget& mass, const atmosphere::AirState& air,
                     const MultirotorParams& params);

/// Mean rotor-induced velocity in hover, sqrt(W / (2 rho A)).
double hover_induced_velocity(const MassBudget& mass, const atmosphere::AirState& air,
                              const MultirotorParams& params);

double multirotor_power(const KinematicState& state, const MassBudget& mass,
                        const atmosphere::AirState& air, const MultirotorParams& params);

using AirframeParams = std::variant<MultirotorParams, FixedWingParams>;

double propulsion_power(const AirframeParams& airframe, const KinematicState& state,
                        const MassBudget& mass, const atmosphere::AirState& air);

}  // namespace uavbs::uav
