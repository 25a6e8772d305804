#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "uavbs/error.hpp"
#include "uavbs/scenario.hpp"

using namespace uavbs;
using uavbs::test::at;
using uavbs::test::constant_series;

namespace {

SimulationSetup setup_for(Platform p, EquipmentCase c) {
    SimulationSetup s;
    s.platform = default_platform(p);
    s.equipment = c;
    return s;
}

}  // namespace

TEST(Names, RoundTrip) {
    for (auto p : kAllPlatforms) EXPECT_EQ(parse_platform(to_string(p)), p);
    for (auto c : kAllCases) EXPECT_EQ(parse_case(to_string(c)), c);
    for (auto s : kAllSeasons) EXPECT_EQ(parse_season(to_string(s)), s);
    EXPECT_THROW(parse_platform("helicopter"), ConfigError);
    EXPECT_THROW(parse_case("pv_only"), ConfigError);
    EXPECT_THROW(parse_season("spring"), ConfigError);
}

TEST(Simulate, SingleSample) {
    const auto weather = constant_series(at(2022, 6, 21, 12, 120), 1);
    const auto ledger = simulate(setup_for(Platform::Multirotor, EquipmentCase::PvAndWt), weather);
    ASSERT_EQ(ledger.records.size(), 1u);
    const auto& r = ledger.records[0];
    EXPECT_EQ(r.timestamp, weather[0].timestamp);
    EXPECT_DOUBLE_EQ(r.cumulative_consumed_wh, r.power.total_consumption);
    EXPECT_DOUBLE_EQ(r.cumulative_harvested_wh, r.harvest.total_harvest);
    EXPECT_GT(r.harvest.pv, 0.0);
    EXPECT_GT(r.harvest.wt, 0.0);
}

TEST(Simulate, IdenticalSamplesDoubleTheEnergy) {
    auto weather = constant_series(at(2022, 3, 20, 0, 60), 2);
    weather[1].timestamp.utc = weather[0].timestamp.utc + std::chrono::hours{1};
    // Same position of the sun is not possible an hour apart, so keep it dark.
    const auto ledger = simulate(setup_for(Platform::FixedWing, EquipmentCase::WtOnly), weather);
    ASSERT_EQ(ledger.records.size(), 2u);
    EXPECT_EQ(ledger.records[0].harvest.pv, 0.0);
    EXPECT_EQ(ledger.records[1].cumulative_consumed_wh, 2.0 * ledger.records[0].cumulative_consumed_wh);
    EXPECT_EQ(ledger.records[1].cumulative_harvested_wh, 2.0 * ledger.records[0].cumulative_harvested_wh);
}

TEST(Simulate, HarvestersAddPropulsionLoad) {
    const auto weather = constant_series(at(2022, 9, 23, 6, 120), 12);
    for (auto p : kAllPlatforms) {
        const auto none = simulate(setup_for(p, EquipmentCase::None), weather);
        const auto pv = simulate(setup_for(p, EquipmentCase::PvOnly), weather);
        const auto wt = simulate(setup_for(p, EquipmentCase::WtOnly), weather);
        const auto both = simulate(setup_for(p, EquipmentCase::PvAndWt), weather);
        for (std::size_t i = 0; i < weather.size(); ++i) {
            EXPECT_GT(both.records[i].power.propulsion, none.records[i].power.propulsion);
            EXPECT_GT(pv.records[i].power.propulsion, none.records[i].power.propulsion);
            EXPECT_GT(wt.records[i].power.propulsion, none.records[i].power.propulsion);
            EXPECT_GT(both.records[i].power.propulsion, pv.records[i].power.propulsion);
            EXPECT_GT(both.records[i].power.propulsion, wt.records[i].power.propulsion);
            EXPECT_EQ(none.records[i].harvest.total_harvest, 0.0);
            EXPECT_EQ(pv.records[i].harvest.wt, 0.0);
            EXPECT_EQ(wt.records[i].harvest.pv, 0.0);
        }
    }
}

TEST(Simulate, RemovingTurbineLeavesPvUnchanged) {
    const auto weather = constant_series(at(2022, 6, 21, 4, 120), 18);
    const auto both = simulate(setup_for(Platform::Multirotor, EquipmentCase::PvAndWt), weather);
    const auto pv = simulate(setup_for(Platform::Multirotor, EquipmentCase::PvOnly), weather);
    for (std::size_t i = 0; i < weather.size(); ++i) {
        EXPECT_EQ(both.records[i].harvest.pv, pv.records[i].harvest.pv);
    }
}

TEST(Simulate, ConservesEnergy) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<atmosphere::WeatherSample> weather;
    for (int h = 0; h < 24; ++h) {
        weather.push_back(test::sample(at(2022, 3, 20, h, 60), -5 + 25 * u(rng), 98000 + 5000 * u(rng), u(rng),
                                       22 * u(rng), u(rng)));
    }
    for (auto p : kAllPlatforms) {
        for (auto c : kAllCases) {
            const auto ledger = simulate(setup_for(p, c), weather);
            double consumed = 0.0;
            double harvested = 0.0;
            for (const auto& r : ledger.records) {
                consumed += r.power.total_consumption * ledger.step_hours();
                harvested += r.harvest.total_harvest * ledger.step_hours();
                EXPECT_DOUBLE_EQ(r.power.total_consumption, r.power.propulsion + r.power.mimo + r.power.irs);
                EXPECT_DOUBLE_EQ(r.harvest.total_harvest, r.harvest.pv + r.harvest.wt);
                EXPECT_DOUBLE_EQ(r.net_w, r.harvest.total_harvest - r.power.total_consumption);
            }
            EXPECT_NEAR(ledger.records.back().cumulative_consumed_wh, consumed, 1e-9);
            EXPECT_NEAR(ledger.records.back().cumulative_harvested_wh, harvested, 1e-9);
        }
    }
}

TEST(Simulate, Deterministic) {
    const auto weather = constant_series(at(2022, 12, 21, 0, 60), 24, 9.0, 0.6);
    const auto setup = setup_for(Platform::Multirotor, EquipmentCase::PvAndWt);
    const auto a = simulate(setup, weather);
    const auto b = simulate(setup, weather);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].power.total_consumption, b.records[i].power.total_consumption);
        EXPECT_EQ(a.records[i].harvest.total_harvest, b.records[i].harvest.total_harvest);
        EXPECT_EQ(a.records[i].cumulative_consumed_wh, b.records[i].cumulative_consumed_wh);
    }
}

TEST(Simulate, RejectsBadSchedules) {
    const auto setup = setup_for(Platform::Multirotor, EquipmentCase::None);
    EXPECT_THROW(simulate(setup, {}), WeatherError);

    auto weather = constant_series(at(2022, 3, 20, 0), 3);
    std::swap(weather[1], weather[2]);
    EXPECT_THROW(simulate(setup, weather), WeatherError);

    weather = constant_series(at(2022, 3, 20, 0), 3);
    weather[2].timestamp.utc += std::chrono::minutes{30};
    EXPECT_THROW(simulate(setup, weather), WeatherError);

    weather = constant_series(at(2022, 3, 20, 0), 3);
    weather[1].rel_humidity = 1.5;
    EXPECT_THROW(simulate(setup, weather), WeatherError);

    auto half = setup;
    half.step = std::chrono::minutes{30};
    EXPECT_THROW(simulate(half, constant_series(at(2022, 3, 20, 0), 3)), WeatherError);
}

TEST(Simulate, RejectsHoveringFixedWing) {
    auto setup = setup_for(Platform::FixedWing, EquipmentCase::None);
    setup.platform.kinematics.velocity_mps = 0.0;
    EXPECT_THROW(simulate(setup, constant_series(at(2022, 3, 20, 0), 2)), FixedWingHoverError);
}

TEST(Simulate, OverridesApplyPerStep) {
    const auto weather = constant_series(at(2022, 3, 20, 0), 3);
    auto setup = setup_for(Platform::Multirotor, EquipmentCase::None);
    setup.overrides = {{}, {.irs_elements = 32}, {.irs_elements = 0}};
    const auto ledger = simulate(setup, weather);
    EXPECT_DOUBLE_EQ(ledger.records[0].power.irs, 124.8);
    EXPECT_DOUBLE_EQ(ledger.records[1].power.irs, 249.6);
    EXPECT_EQ(ledger.records[2].power.irs, 0.0);

    setup.overrides.pop_back();
    EXPECT_THROW(simulate(setup, weather), ConfigError);
    setup.overrides = {{}, {.users = 40}, {}};
    EXPECT_THROW(simulate(setup, weather), ModelPreconditionError);
}

TEST(Normalize, Examples) {
    const std::vector<double> a{1.0, 2.0, 4.0};
    EXPECT_EQ(normalize_series(a), (std::vector<double>{0.25, 0.5, 1.0}));
    const std::vector<double> z{0.0, 0.0};
    EXPECT_EQ(normalize_series(z), (std::vector<double>{0.0, 0.0}));
    EXPECT_TRUE(normalize_series({}).empty());
}

TEST(Normalize, IdempotentAndScaleInvariant) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1000.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> v(1 + i % 40);
        for (auto& x : v) x = u(rng);
        const auto n = normalize_series(v);
        EXPECT_EQ(*std::max_element(n.begin(), n.end()), 1.0);
        const auto nn = normalize_series(n);
        for (std::size_t k = 0; k < n.size(); ++k) EXPECT_NEAR(nn[k], n[k], 1e-15);
        std::vector<double> scaled = v;
        for (auto& x : scaled) x *= 3.5;
        const auto ns = normalize_series(scaled);
        for (std::size_t k = 0; k < n.size(); ++k) EXPECT_NEAR(ns[k], n[k], 1e-15);
    }
}

TEST(Battery, ClipsAndReports) {
    using std::chrono::hours;
    auto s = battery_step(50.0, 20.0, hours{1}, 100.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(s.soc_wh, 70.0);
    s = battery_step(90.0, 40.0, hours{1}, 100.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(s.soc_wh, 100.0);
    EXPECT_DOUBLE_EQ(s.spilled_wh, 30.0);
    s = battery_step(10.0, -30.0, hours{1}, 100.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(s.soc_wh, 0.0);
    EXPECT_DOUBLE_EQ(s.unmet_wh, 20.0);
    s = battery_step(50.0, 10.0, hours{1}, 100.0, 0.9, 1.0);
    EXPECT_DOUBLE_EQ(s.soc_wh, 59.0);
    s = battery_step(50.0, -10.0, hours{1}, 100.0, 1.0, 0.8);
    EXPECT_DOUBLE_EQ(s.soc_wh, 37.5);
}

TEST(Battery, LedgerStaysInRange) {
    auto setup = setup_for(Platform::Multirotor, EquipmentCase::PvAndWt);
    setup.battery = BatteryConfig{200.0, 150.0, 0.95, 0.95};
    const auto ledger = simulate(setup, constant_series(at(2022, 6, 21, 0, 120), 24, 12.0, 0.0));
    for (const auto& r : ledger.records) {
        ASSERT_TRUE(r.battery.has_value());
        EXPECT_GE(r.battery->soc_wh, 0.0);
        EXPECT_LE(r.battery->soc_wh, 200.0);
    }
    EXPECT_EQ(ledger.records.back().battery->soc_wh, 0.0);
}

TEST(Presets, FourSeasonsFullGrid) {
    const auto presets = seasonal_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
        EXPECT_EQ(presets[i].season, kAllSeasons[i]);
        EXPECT_EQ(presets[i].grid.size(), 8u);
        EXPECT_NEAR(presets[i].site.latitude_deg, 52.4064, 1e-9);
    }
    using namespace std::chrono;
    EXPECT_EQ(presets[1].date, year{2022} / June / 21);
    EXPECT_EQ(presets[3].date, year{2022} / December / 21);
}
