#pragma once

#include <map>
#include <string>
#include <string_view>

namespace uavbs::payload {

struct IrsConfig {
    int element_count = 16;
    int bit_resolution = 6;
    std::map<int, double> shifter_power_w{{6, 7.8}};  // W per element, keyed by bits
};

/// Coefficients of the load- and array-dependent transceiver sub-models:
///   P_TC  = p_syn + M * p_ant
///   P_CE  = c_ce * M * K
///   P_C/D = (TR_UL + TR_DL) * (e_cod + e_dec)
///   P_BH  = (TR_UL + TR_DL) * e_bh
///   P_SP  = c_sp0 + c_sp * M * K
/// Throughput coefficients are in W per Mbps.
struct MimoCoefficients {
    double p_syn = 0.0;
    double p_ant = 0.0;
    double c_ce = 0.0;
    double e_cod = 0.0;
    double e_dec = 0.0;
    double e_bh = 0.0;
    double c_sp0 = 0.0;
    double c_sp = 0.0;
};

/// Named coefficient presets: "zero" and "massive-mimo-ref".
MimoCoefficients mimo_coefficient_preset(std::string_view name);

struct MimoConfig {
    int antennas = 16;
    int users = 10;
    double tr_ul_mbps = 50.0;
    double tr_dl_mbps = 100.0;
    double p_fix_w = 0.0;
    double p_tx_w = 15.0;
    double pa_efficiency = 0.35;
    MimoCoefficients coeffs{};
};

struct MimoBreakdown {
    double fixed = 0.0;
    double transceiver_chains = 0.0;
    double channel_estimation = 0.0;
    double coding_decoding = 0.0;
    double backhaul = 0.0;
    double signal_processing = 0.0;
    double power_amplifier = 0.0;
    double total = 0.0;
};

struct PayloadBreakdown {
    double irs = 0.0;
    MimoBreakdown mimo;
    double total = 0.0;
};

void validate(const IrsConfig& cfg);
void validate(const MimoConfig& cfg);

/// N * P_n(b). Throws UnknownBitResolutionError if b is not tabulated.
double irs_power(const IrsConfig& cfg);

MimoBreakdown mimo_power(const MimoConfig& cfg);

PayloadBreakdown payload_power_total(const IrsConfig& irs, const MimoConfig& mimo);

}  // namespace uavbs::payload
