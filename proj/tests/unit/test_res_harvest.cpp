#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "uavbs/error.hpp"
#include "uavbs/res_harvest.hpp"

using namespace uavbs;
using namespace uavbs::res;

namespace {
const atmosphere::AirState kRef{1.225, 288.15};
}

TEST(Pv, StandardTestConditions) {
    EXPECT_NEAR(pv_power(PvConfig{}, 1000.0, 25.0), 14.4, 1e-9);
    EXPECT_NEAR(pv_power(PvConfig{}, 1000.0, 45.0), 12.96, 1e-9);
    EXPECT_EQ(pv_power(PvConfig{}, 0.0, 30.0), 0.0);
}

TEST(Pv, ClampsAtZeroForExtremeCellTemperature) {
    // 1 - 0.005 * (250 - 25) < 0
    EXPECT_EQ(pv_power(PvConfig{}, 800.0, 250.0), 0.0);
}

TEST(Pv, LinearInIrradianceAffineInTemperature) {
    const PvConfig cfg;
    const double per_watt = pv_power(cfg, 1.0, 40.0);
    for (double g : {10.0, 250.0, 999.0, 1200.0}) {
        EXPECT_NEAR(pv_power(cfg, g, 40.0), g * per_watt, 1e-12 * g);
    }
    const double a = pv_power(cfg, 600.0, 10.0);
    const double b = pv_power(cfg, 600.0, 30.0);
    const double c = pv_power(cfg, 600.0, 50.0);
    EXPECT_NEAR(b - a, c - b, 1e-12);
    EXPECT_LT(c, a);
}

TEST(Pv, BoundedOnSampledInputs) {
    const PvConfig cfg;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> g(0.0, 1367.0);
    std::uniform_real_distribution<double> t(-40.0, 90.0);
    for (int i = 0; i < 1000; ++i) {
        const double gt = g(rng);
        const double tc = t(rng);
        const double p = pv_power(cfg, gt, tc);
        const double bound = cfg.rated_power_w * cfg.derating * gt / cfg.g_stc_w_m2 *
                             (1.0 + std::abs(cfg.temp_coeff_pct_per_c) * 65.0 / 100.0);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, bound + 1e-12);
    }
}

TEST(Wt, PiecewiseBranches) {
    const WtConfig cfg;
    EXPECT_EQ(wt_power(cfg, 1.0, kRef), 0.0);
    EXPECT_EQ(wt_power(cfg, 1.9, kRef), 0.0);
    EXPECT_EQ(wt_power(cfg, 2.0, kRef), 0.0);
    EXPECT_DOUBLE_EQ(wt_power(cfg, 16.0, kRef), 30.0);
    EXPECT_DOUBLE_EQ(wt_power(cfg, 20.0, kRef), 30.0);
    EXPECT_EQ(wt_power(cfg, 20.01, kRef), 0.0);
    EXPECT_EQ(wt_power(cfg, 25.0, kRef), 0.0);
}

TEST(Wt, ContinuousAtRatedSpeed) {
    const WtConfig cfg;
    EXPECT_NEAR(wt_power(cfg, 16.0 - 1e-9, kRef), wt_power(cfg, 16.0, kRef), 1e-8);
    EXPECT_DOUBLE_EQ(cfg.power_curve(16.0), 1.0);
}

TEST(Wt, NonDecreasingUpToCutOut) {
    const WtConfig cfg;
    double prev = 0.0;
    for (double v = 0.0; v <= 20.0; v += 0.01) {
        const double p = wt_power(cfg, v, kRef);
        EXPECT_GE(p, prev) << "v=" << v;
        prev = p;
    }
}

TEST(Wt, InterpolatesLinearlyBetweenKnots) {
    const WtConfig cfg;
    const auto knots = cfg.power_curve.knots();
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double mid = 0.5 * (knots[i].wind_speed_mps + knots[i + 1].wind_speed_mps);
        EXPECT_NEAR(cfg.power_curve(mid), 0.5 * (knots[i].normalized_power + knots[i + 1].normalized_power), 1e-12);
    }
}

TEST(Wt, ScalesWithAirDensity) {
    const WtConfig cfg;
    const atmosphere::AirState thin{1.1, 290.0};
    EXPECT_NEAR(wt_power(cfg, 17.0, thin), 30.0 * 1.1 / 1.225, 1e-12);
    EXPECT_NEAR(wt_power(cfg, 9.0, thin), wt_power(cfg, 9.0, kRef) * 1.1 / 1.225, 1e-12);
}

TEST(Wt, MalformedCurvesRejected) {
    EXPECT_THROW(PowerCurve({{2.0, 0.0}}), ConfigError);
    EXPECT_THROW(PowerCurve({{2.0, 0.0}, {2.0, 0.5}, {16.0, 1.0}}), ConfigError);
    EXPECT_THROW(PowerCurve({{2.0, 0.0}, {8.0, 0.6}, {10.0, 0.5}, {16.0, 1.0}}), ConfigError);
    EXPECT_THROW(PowerCurve({{2.0, 0.0}, {16.0, 1.2}}), ConfigError);

    WtConfig cfg;
    cfg.power_curve = PowerCurve({{2.0, 0.1}, {16.0, 1.0}});
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.power_curve = PowerCurve({{2.0, 0.0}, {16.0, 0.9}});
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg.power_curve = PowerCurve({{3.0, 0.0}, {16.0, 1.0}});
    EXPECT_THROW(validate(cfg), ConfigError);
    cfg = WtConfig{};
    cfg.cut_out_mps = 15.0;
    EXPECT_THROW(validate(cfg), ConfigError);
    EXPECT_NO_THROW(validate(WtConfig{}));
}
