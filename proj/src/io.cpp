#include "uavbs/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace uavbs::io {

WeatherParseError::WeatherParseError(const std::string& source, int line, std::string field,
                                     const std::string& msg)
    : WeatherError(source + ":" + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") +
                   ": " + msg),
      line_(line),
      field_(std::move(field)) {}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool parse_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = first + text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 so outputs stay byte-stable
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::vector<atmosphere::WeatherSample> parse_weather_csv(std::istream& in, const std::string& source) {
    static constexpr std::array<std::string_view, 6> kColumns{
        "timestamp", "temp_c", "pressure_pa", "rel_humidity", "wind_mps", "cloud_opacity"};

    std::string line;
    if (!std::getline(in, line)) throw WeatherParseError(source, 1, "", "missing header");
    line = strip_cr(line);
    if (line != kWeatherHeader) {
        const auto cols = split_csv_line(line);
        for (std::size_t i = 0; i < kColumns.size(); ++i) {
            if (i >= cols.size() || cols[i] != kColumns[i]) {
                throw WeatherParseError(source, 1, std::string(kColumns[i]),
                                        "missing or misplaced column; expected header '" +
                                            std::string(kWeatherHeader) + "'");
            }
        }
        throw WeatherParseError(source, 1, "", "unexpected extra columns in header");
    }

    std::vector<atmosphere::WeatherSample> samples;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != kColumns.size()) {
            throw WeatherParseError(source, line_no, "",
                                    "expected 6 fields, found " + std::to_string(fields.size()));
        }

        atmosphere::WeatherSample s;
        try {
            s.timestamp = parse_timestamp(fields[0]);
        } catch (const std::invalid_argument& e) {
            throw WeatherParseError(source, line_no, "timestamp", e.what());
        }
        std::array<double*, 5> targets{&s.ambient_temp_c, &s.pressure_pa, &s.rel_humidity,
                                       &s.wind_speed_ref_mps, &s.cloud_opacity};
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (!parse_double(fields[i + 1], *targets[i])) {
                throw WeatherParseError(source, line_no, std::string(kColumns[i + 1]),
                                        "unparseable value '" + std::string(fields[i + 1]) + "'");
            }
        }

        auto range = [&](bool ok, std::string_view field, std::string_view rule) {
            if (!ok) {
                throw WeatherParseError(source, line_no, std::string(field),
                                        "out of range (" + std::string(rule) + ")");
            }
        };
        range(s.ambient_temp_c > -atmosphere::kKelvinOffset, "temp_c", "must be > -273.15");
        range(s.pressure_pa > 0.0, "pressure_pa", "must be > 0");
        range(s.rel_humidity >= 0.0 && s.rel_humidity <= 1.0, "rel_humidity", "must be in [0,1]");
        range(s.wind_speed_ref_mps >= 0.0, "wind_mps", "must be >= 0");
        range(s.cloud_opacity >= 0.0 && s.cloud_opacity <= 1.0, "cloud_opacity", "must be in [0,1]");

        if (!samples.empty() && !(s.timestamp.utc > samples.back().timestamp.utc)) {
            throw WeatherParseError(source, line_no, "timestamp",
                                    "timestamps must be strictly increasing");
        }
        samples.push_back(s);
    }
    if (samples.empty()) throw NoSamplesError(source);
    return samples;
}

std::vector<atmosphere::WeatherSample> parse_weather_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WeatherError("cannot open weather file " + path.string());
    return parse_weather_csv(in, path.string());
}

void write_weather_csv(std::ostream& out, std::span<const atmosphere::WeatherSample> samples) {
    out << kWeatherHeader << '\n';
    for (const auto& s : samples) {
        out << format_timestamp(s.timestamp) << ',' << format_number(s.ambient_temp_c) << ','
            << format_number(s.pressure_pa) << ',' << format_number(s.rel_humidity) << ','
            << format_number(s.wind_speed_ref_mps) << ',' << format_number(s.cloud_opacity) << '\n';
    }
}

void write_ledger_csv(std::ostream& out, const EnergyLedger& ledger) {
    const bool battery = !ledger.records.empty() && ledger.records.front().battery.has_value();
    out << kLedgerHeader;
    if (battery) out << ',' << kBatteryColumns;
    out << '\n';
    for (const auto& r : ledger.records) {
        out << format_timestamp(r.timestamp) << ',' << format_number(r.power.propulsion) << ','
            << format_number(r.power.mimo) << ',' << format_number(r.power.irs) << ','
            << format_number(r.power.total_consumption) << ',' << format_number(r.harvest.pv) << ','
            << format_number(r.harvest.wt) << ',' << format_number(r.harvest.total_harvest) << ','
            << format_number(r.net_w) << ',' << format_number(r.cumulative_consumed_wh) << ','
            << format_number(r.cumulative_harvested_wh);
        if (battery) {
            out << ',' << format_number(r.battery->soc_wh) << ',' << format_number(r.battery->spilled_wh)
                << ',' << format_number(r.battery->unmet_wh);
        }
        out << '\n';
    }
}

EnergyLedger parse_ledger_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("ledger CSV is empty");
    line = strip_cr(line);
    const std::string with_battery = std::string(kLedgerHeader) + "," + std::string(kBatteryColumns);
    bool battery = false;
    if (line == with_battery) {
        battery = true;
    } else if (line != kLedgerHeader) {
        throw Error("ledger CSV has an unexpected header");
    }
    const std::size_t n_fields = battery ? 14 : 11;

    EnergyLedger ledger;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != n_fields) throw Error("ledger line " + std::to_string(line_no) + ": wrong field count");
        LedgerRecord r;
        try {
            r.timestamp = parse_timestamp(f[0]);
        } catch (const std::invalid_argument& e) {
            throw Error("ledger line " + std::to_string(line_no) + ": " + e.what());
        }
        std::array<double, 13> v{};
        for (std::size_t i = 1; i < n_fields; ++i) {
            if (!parse_double(f[i], v[i - 1])) {
                throw Error("ledger line " + std::to_string(line_no) + ": unparseable number");
            }
        }
        r.power = {v[0], v[1], v[2], v[3]};
        r.harvest = {v[4], v[5], v[6]};
        r.net_w = v[7];
        r.cumulative_consumed_wh = v[8];
        r.cumulative_harvested_wh = v[9];
        if (battery) r.battery = BatteryStep{v[10], v[11], v[12]};
        ledger.records.push_back(r);
    }
    if (ledger.records.size() >= 2) {
        ledger.step = std::chrono::duration_cast<std::chrono::seconds>(ledger.records[1].timestamp.utc -
                                                                       ledger.records[0].timestamp.utc);
    }
    return ledger;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace uavbs::io
