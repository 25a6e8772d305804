#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uavbs/error.hpp"
#include "uavbs/scenario.hpp"

namespace uavbs::io {

inline constexpr std::string_view kWeatherHeader =
    "timestamp,temp_c,pressure_pa,rel_humidity,wind_mps,cloud_opacity";
inline constexpr std::string_view kLedgerHeader =
    "timestamp,p_propulsion_w,p_mimo_w,p_irs_w,p_consumption_w,p_pv_w,p_wt_w,p_harvest_w,net_w,"
    "e_consumed_wh,e_harvested_wh";
// Appended to the ledger header only when the battery ledger is enabled.
inline constexpr std::string_view kBatteryColumns = "battery_soc_wh,spilled_wh,unmet_wh";

/// A weather file problem tied to a line (1-based, header is line 1) and,
/// where it applies, a column.
class WeatherParseError : public WeatherError {
public:
    WeatherParseError(const std::string& source, int line, std::string field, const std::string& msg);
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

/// Header present but no data rows.
class NoSamplesError : public WeatherError {
public:
    explicit NoSamplesError(const std::string& source)
        : WeatherError(source + ": no samples after the header") {}
};

std::string strip_cr(std::string line);
std::vector<std::string_view> split_csv_line(std::string_view line);
bool parse_double(std::string_view text, double& out);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

std::vector<atmosphere::WeatherSample> parse_weather_csv(std::istream& in,
                                                         const std::string& source = "<stream>");
std::vector<atmosphere::WeatherSample> parse_weather_csv(const std::filesystem::path& path);
void write_weather_csv(std::ostream& out, std::span<const atmosphere::WeatherSample> samples);

void write_ledger_csv(std::ostream& out, const EnergyLedger& ledger);
/// Reads back what write_ledger_csv wrote. The step is inferred from the
/// first two timestamps (or left at its default for a single record).
EnergyLedger parse_ledger_csv(std::istream& in);

/// Replaces `path` with `contents`. Throws Error on I/O failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace uavbs::io
