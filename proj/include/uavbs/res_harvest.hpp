#pragma once

#include <span>
#include <vector>

#include "uavbs/atmosphere.hpp"

namespace uavbs::res {

struct PvConfig {
    double rated_power_w = 20.0;
    double derating = 0.72;
    double temp_coeff_pct_per_c = -0.5;  // percent per degree C
    double g_stc_w_m2 = 1000.0;
    double t_cell_stc_c = 25.0;
};

void validate(const PvConfig& cfg);

struct CurveKnot {
    double wind_speed_mps;
    double normalized_power;
};

/// Normalized turbine power curve, linearly interpolated between knots.
/// Knot speeds are strictly increasing and values non-decreasing in [0,1].
class PowerCurve {
public:
    explicit PowerCurve(std::vector<CurveKnot> knots);

    /// Generic small-turbine shape spanning 2..16 m/s.
    static PowerCurve default_preset();

    /// Clamps to the first/last knot value outside the knot range.
    double operator()(double wind_speed_mps) const;

    std::span<const CurveKnot> knots() const { return knots_; }

private:
    std::vector<CurveKnot> knots_;
};

struct WtConfig {
    double cut_in_mps = 2.0;
    double rated_speed_mps = 16.0;
    double cut_out_mps = 20.0;
    double rated_power_w = 30.0;
    PowerCurve power_curve = PowerCurve::default_preset();
    double rho_ref = 1.225;
};

/// Checks the speed ordering and that the curve reads 0 at cut-in and 1 at
/// rated speed. Throws ConfigError.
void validate(const WtConfig& cfg);

/// PV output with the linear temperature derating, clamped at 0.
double pv_power(const PvConfig& cfg, double irradiance_w_m2, double cell_temp_c);

/// Piecewise turbine output at hub-height wind speed, scaled by rho/rho_ref.
/// Zero above cut-out.
double wt_power(const WtConfig& cfg, double hub_wind_mps, const atmosphere::AirState& air);

}  // namespace uavbs::res
