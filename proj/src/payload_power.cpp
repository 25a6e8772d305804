#include "uavbs/payload_power.hpp"

#include <cmath>

#include "uavbs/error.hpp"

namespace uavbs::payload {
namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ModelPreconditionError(what);
}

bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

MimoCoefficients mimo_coefficient_preset(std::string_view name) {
    if (name == "zero") return {};
    if (name == "massive-mimo-ref") {
        // Illustrative magnitudes for a small MMSE massive-MIMO cell; not
        // calibrated against any particular hardware.
        MimoCoefficients c;
        c.p_syn = 2.0;
        c.p_ant = 1.0;
        c.c_ce = 0.01;
        c.e_cod = 0.1e-3;
        c.e_dec = 0.8e-3;
        c.e_bh = 0.25e-3;
        c.c_sp0 = 0.5;
        c.c_sp = 0.02;
        return c;
    }
    throw ConfigError("unknown MIMO coefficient preset '" + std::string(name) + "'");
}

void validate(const IrsConfig& cfg) {
    require(cfg.element_count >= 0, "IRS element_count must be >= 0");
    for (const auto& [bits, watts] : cfg.shifter_power_w) {
        require(bits > 0, "phase-shifter resolution must be > 0 bits");
        require(non_negative(watts), "phase-shifter power must be >= 0");
    }
    if (!cfg.shifter_power_w.contains(cfg.bit_resolution)) {
        throw UnknownBitResolutionError(cfg.bit_resolution);
    }
}

void validate(const MimoConfig& cfg) {
    require(cfg.users >= 0 && cfg.antennas >= cfg.users, "need antennas >= users >= 0");
    require(std::isfinite(cfg.pa_efficiency) && cfg.pa_efficiency > 0.0 &&
                cfg.pa_efficiency <= 1.0,
            "PA efficiency must be in (0,1]");
    require(non_negative(cfg.tr_ul_mbps) && non_negative(cfg.tr_dl_mbps),
            "throughputs must be >= 0");
    require(non_negative(cfg.p_fix_w) && non_negative(cfg.p_tx_w), "P_FIX and P_TX must be >= 0");
    const auto& c = cfg.coeffs;
    for (double v : {c.p_syn, c.p_ant, c.c_ce, c.e_cod, c.e_dec, c.e_bh, c.c_sp0, c.c_sp}) {
        require(non_negative(v), "MIMO coefficients must be >= 0");
    }
}

double irs_power(const IrsConfig& cfg) {
    validate(cfg);
    return cfg.element_count * cfg.shifter_power_w.at(cfg.bit_resolution);
}

MimoBreakdown mimo_power(const MimoConfig& cfg) {
    validate(cfg);
    const auto& c = cfg.coeffs;
    const double m = cfg.antennas;
    const double mk = m * cfg.users;
    const double traffic = cfg.tr_ul_mbps + cfg.tr_dl_mbps;

    MimoBreakdown b;
    b.fixed = cfg.p_fix_w;
    b.transceiver_chains = c.p_syn + m * c.p_ant;
    b.channel_estimation = c.c_ce * mk;
    b.coding_decoding = traffic * (c.e_cod + c.e_dec);
    b.backhaul = traffic * c.e_bh;
    b.signal_processing = c.c_sp0 + c.c_sp * mk;
    b.power_amplifier = cfg.p_tx_w / cfg.pa_efficiency;
    b.total = b.fixed + b.transceiver_chains + b.channel_estimation + b.coding_decoding +
              b.backhaul + b.signal_processing + b.power_amplifier;
    return b;
}

PayloadBreakdown payload_power_total(const IrsConfig& irs, const MimoConfig& mimo) {
    PayloadBreakdown out;
    out.irs = irs_power(irs);
    out.mimo = mimo_power(mimo);
    out.total = out.irs + out.mimo.total;
    return out;
}

}  // namespace uavbs::payload
