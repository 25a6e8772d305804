#include "uavbs/res_harvest.hpp"

#include <algorithm>
#include <cmath>

#include "uavbs/error.hpp"

namespace uavbs::res {

void validate(const PvConfig& cfg) {
    if (!(std::isfinite(cfg.rated_power_w) && cfg.rated_power_w >= 0.0)) {
        throw ConfigError("PV rated power must be >= 0");
    }
    if (!(cfg.derating > 0.0 && cfg.derating <= 1.0)) {
        throw ConfigError("PV derating factor must be in (0,1]");
    }
    if (!(std::isfinite(cfg.g_stc_w_m2) && cfg.g_stc_w_m2 > 0.0)) {
        throw ConfigError("PV STC irradiance must be > 0");
    }
    if (!std::isfinite(cfg.temp_coeff_pct_per_c) || !std::isfinite(cfg.t_cell_stc_c)) {
        throw ConfigError("PV temperature parameters must be finite");
    }
}

PowerCurve::PowerCurve(std::vector<CurveKnot> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw ConfigError("power curve needs at least two knots");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        const auto& k = knots_[i];
        if (!std::isfinite(k.wind_speed_mps) || !std::isfinite(k.normalized_power) ||
            k.normalized_power < 0.0 || k.normalized_power > 1.0) {
            throw ConfigError("power curve knot " + std::to_string(i) +
                              " must be finite with value in [0,1]");
        }
        if (i > 0) {
            if (!(k.wind_speed_mps > knots_[i - 1].wind_speed_mps)) {
                throw ConfigError("power curve knot speeds must be strictly increasing");
            }
            if (k.normalized_power < knots_[i - 1].normalized_power) {
                throw ConfigError("power curve must be non-decreasing");
            }
        }
    }
}

PowerCurve PowerCurve::default_preset() {
    return PowerCurve({{2.0, 0.0},
                       {4.0, 0.04},
                       {6.0, 0.13},
                       {8.0, 0.29},
                       {10.0, 0.52},
                       {12.0, 0.76},
                       {14.0, 0.92},
                       {16.0, 1.0}});
}

double PowerCurve::operator()(double v) const {
    if (v <= knots_.front().wind_speed_mps) return knots_.front().normalized_power;
    if (v >= knots_.back().wind_speed_mps) return knots_.back().normalized_power;
    const auto hi = std::upper_bound(knots_.begin(), knots_.end(), v,
                                     [](double s, const CurveKnot& k) { return s < k.wind_speed_mps; });
    const auto lo = hi - 1;
    const double t = (v - lo->wind_speed_mps) / (hi->wind_speed_mps - lo->wind_speed_mps);
    return lo->normalized_power + t * (hi->normalized_power - lo->normalized_power);
}

void validate(const WtConfig& cfg) {
    if (!(cfg.cut_in_mps > 0.0 && cfg.cut_in_mps < cfg.rated_speed_mps &&
          cfg.rated_speed_mps < cfg.cut_out_mps && std::isfinite(cfg.cut_out_mps))) {
        throw ConfigError("wind turbine needs 0 < cut_in < rated_speed < cut_out");
    }
    if (!(std::isfinite(cfg.rated_power_w) && cfg.rated_power_w >= 0.0)) {
        throw ConfigError("wind turbine rated power must be >= 0");
    }
    if (!(std::isfinite(cfg.rho_ref) && cfg.rho_ref > 0.0)) {
        throw ConfigError("wind turbine reference density must be > 0");
    }
    const auto knots = cfg.power_curve.knots();
    if (knots.front().wind_speed_mps > cfg.cut_in_mps ||
        knots.back().wind_speed_mps < cfg.rated_speed_mps) {
        throw ConfigError("power curve must span [cut_in, rated_speed]");
    }
    if (cfg.power_curve(cfg.cut_in_mps) != 0.0) {
        throw ConfigError("power curve must be 0 at cut-in speed");
    }
    if (cfg.power_curve(cfg.rated_speed_mps) != 1.0) {
        throw ConfigError("power curve must be 1 at rated speed");
    }
}

double pv_power(const PvConfig& cfg, double g_t, double t_cell) {
    if (!(std::isfinite(g_t) && g_t >= 0.0) || !std::isfinite(t_cell)) {
        throw ModelPreconditionError("PV irradiance must be >= 0 and cell temperature finite");
    }
    const double alpha = cfg.temp_coeff_pct_per_c / 100.0;
    const double p = cfg.rated_power_w * cfg.derating * (g_t / cfg.g_stc_w_m2) *
                     (1.0 + alpha * (t_cell - cfg.t_cell_stc_c));
    return std::max(p, 0.0);
}

double wt_power(const WtConfig& cfg, double v, const atmosphere::AirState& air) {
    if (!(std::isfinite(v) && v >= 0.0)) {
        throw ModelPreconditionError("hub wind speed must be finite and >= 0");
    }
    if (!(std::isfinite(air.density_kg_m3) && air.density_kg_m3 > 0.0)) {
        throw ModelPreconditionError("air density must be > 0");
    }
    double p = 0.0;
    if (v < cfg.cut_in_mps || v > cfg.cut_out_mps) {
        p = 0.0;
    } else if (v < cfg.rated_speed_mps) {
        p = cfg.rated_power_w * cfg.power_curve(v);
    } else {
        p = cfg.rated_power_w;
    }
    const double scale = air.density_kg_m3 / cfg.rho_ref;
    return std::clamp(p * scale, 0.0, cfg.rated_power_w * scale);
}

}  // namespace uavbs::res
