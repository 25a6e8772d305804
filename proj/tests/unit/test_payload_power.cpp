#include <gtest/gtest.h>

#include <random>

#include "uavbs/error.hpp"
#include "uavbs/payload_power.hpp"

using namespace uavbs;
using namespace uavbs::payload;

TEST(Irs, ReferenceSurface) {
    IrsConfig cfg;  // 16 elements, 6-bit, 7.8 W
    EXPECT_DOUBLE_EQ(irs_power(cfg), 124.8);
    cfg.element_count = 0;
    EXPECT_EQ(irs_power(cfg), 0.0);
    cfg.element_count = 32;
    EXPECT_DOUBLE_EQ(irs_power(cfg), 2.0 * 124.8);
}

TEST(Irs, AdditiveInElementCount) {
    IrsConfig a;
    IrsConfig b;
    IrsConfig ab;
    for (int na = 0; na <= 20; ++na) {
        for (int nb = 0; nb <= 20; ++nb) {
            a.element_count = na;
            b.element_count = nb;
            ab.element_count = na + nb;
            EXPECT_NEAR(irs_power(a) + irs_power(b), irs_power(ab), 1e-12);
        }
    }
}

TEST(Irs, UnknownResolutionIsLookupError) {
    IrsConfig cfg;
    cfg.bit_resolution = 3;
    try {
        irs_power(cfg);
        FAIL() << "expected UnknownBitResolutionError";
    } catch (const UnknownBitResolutionError& e) {
        EXPECT_EQ(e.bits(), 3);
    }
    cfg.shifter_power_w[3] = 1.5;
    EXPECT_DOUBLE_EQ(irs_power(cfg), 16 * 1.5);
}

TEST(Mimo, PowerAmplifierTerm) {
    MimoConfig cfg;
    const auto b = mimo_power(cfg);
    EXPECT_NEAR(b.power_amplifier, 42.857142857142857, 1e-9);
    EXPECT_DOUBLE_EQ(b.power_amplifier, cfg.p_tx_w / cfg.pa_efficiency);
}

TEST(Mimo, FixedTermOnly) {
    MimoConfig cfg;
    cfg.p_fix_w = 10.0;
    cfg.p_tx_w = 0.0;
    EXPECT_DOUBLE_EQ(mimo_power(cfg).total, 10.0);
}

TEST(Mimo, TrafficIncreasesPower) {
    MimoConfig loaded;
    loaded.coeffs = mimo_coefficient_preset("massive-mimo-ref");
    MimoConfig idle = loaded;
    idle.tr_ul_mbps = 0.0;
    idle.tr_dl_mbps = 0.0;
    EXPECT_GT(mimo_power(loaded).total, mimo_power(idle).total);
}

TEST(Mimo, MonotoneInArrayAndLoad) {
    MimoConfig base;
    base.coeffs = mimo_coefficient_preset("massive-mimo-ref");
    const double p0 = mimo_power(base).total;
    auto more = base;
    more.antennas += 8;
    EXPECT_GE(mimo_power(more).total, p0);
    more = base;
    more.users += 2;
    EXPECT_GE(mimo_power(more).total, p0);
    more = base;
    more.tr_ul_mbps += 10;
    EXPECT_GE(mimo_power(more).total, p0);
    more = base;
    more.tr_dl_mbps += 10;
    EXPECT_GE(mimo_power(more).total, p0);
}

TEST(Mimo, BreakdownSumsToTotal) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        MimoConfig cfg;
        cfg.users = static_cast<int>(20 * u(rng));
        cfg.antennas = cfg.users + static_cast<int>(64 * u(rng));
        cfg.tr_ul_mbps = 200 * u(rng);
        cfg.tr_dl_mbps = 400 * u(rng);
        cfg.p_fix_w = 20 * u(rng);
        cfg.p_tx_w = 40 * u(rng);
        cfg.pa_efficiency = 0.05 + 0.95 * u(rng);
        cfg.coeffs = {u(rng), u(rng), 0.1 * u(rng), 1e-3 * u(rng), 1e-3 * u(rng), 1e-3 * u(rng), u(rng), 0.1 * u(rng)};
        const auto b = mimo_power(cfg);
        const double sum = b.fixed + b.transceiver_chains + b.channel_estimation + b.coding_decoding + b.backhaul +
                           b.signal_processing + b.power_amplifier;
        EXPECT_NEAR(sum, b.total, 1e-12 * b.total);
        for (double part : {b.fixed, b.transceiver_chains, b.channel_estimation, b.coding_decoding, b.backhaul,
                            b.signal_processing, b.power_amplifier}) {
            EXPECT_GE(part, 0.0);
        }
    }
}

TEST(Mimo, RejectsInvalidConfigs) {
    MimoConfig cfg;
    cfg.pa_efficiency = 0.0;
    EXPECT_THROW(mimo_power(cfg), ModelPreconditionError);
    cfg = {};
    cfg.users = 20;  // more users than antennas
    EXPECT_THROW(mimo_power(cfg), ModelPreconditionError);
    cfg = {};
    cfg.coeffs.c_ce = -1.0;
    EXPECT_THROW(mimo_power(cfg), ModelPreconditionError);
    EXPECT_THROW(mimo_coefficient_preset("nope"), ConfigError);
}

TEST(Payload, TotalKeepsBreakdown) {
    const auto p = payload_power_total(IrsConfig{}, MimoConfig{});
    EXPECT_DOUBLE_EQ(p.irs, 124.8);
    EXPECT_DOUBLE_EQ(p.total, p.irs + p.mimo.total);
}
