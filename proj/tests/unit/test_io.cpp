#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "uavbs/io.hpp"
#include "uavbs/timestamp.hpp"

using namespace uavbs;
using uavbs::test::at;

namespace {

std::string weather_text(int rows, double rh = 0.5) {
    std::ostringstream out;
    out << io::kWeatherHeader << '\n';
    for (int h = 0; h < rows; ++h) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "2022-03-20T%02d:00:00+01:00,8.5,101000,%g,4.2,0.3\n", h, rh);
        out << buf;
    }
    return out.str();
}

std::vector<atmosphere::WeatherSample> parse(const std::string& text) {
    std::istringstream in(text);
    return io::parse_weather_csv(in, "mem");
}

}  // namespace

TEST(Timestamp, ParsesOffsetsAndZulu) {
    const auto a = parse_timestamp("2022-06-21T14:00:00+02:00");
    const auto b = parse_timestamp("2022-06-21T12:00:00Z");
    EXPECT_EQ(a.utc, b.utc);
    EXPECT_EQ(a.offset, std::chrono::minutes{120});
    EXPECT_EQ(format_timestamp(a), "2022-06-21T14:00:00+02:00");
    EXPECT_EQ(format_timestamp(at(2022, 12, 21, 3, -330)), "2022-12-21T03:00:00-05:30");
    EXPECT_THROW(parse_timestamp("2022-06-21 14:00:00"), std::invalid_argument);
    EXPECT_THROW(parse_timestamp("2022-02-30T00:00:00Z"), std::invalid_argument);
    EXPECT_THROW(parse_timestamp("2022-06-21T25:00:00Z"), std::invalid_argument);
}

TEST(WeatherCsv, ParsesFullDay) {
    const auto samples = parse(weather_text(24));
    ASSERT_EQ(samples.size(), 24u);
    EXPECT_EQ(samples[0].timestamp, at(2022, 3, 20, 0, 60));
    EXPECT_DOUBLE_EQ(samples[5].ambient_temp_c, 8.5);
    EXPECT_DOUBLE_EQ(samples[5].pressure_pa, 101000.0);
    EXPECT_DOUBLE_EQ(samples[5].cloud_opacity, 0.3);
}

TEST(WeatherCsv, AcceptsCrlf) {
    std::string text = weather_text(3);
    std::string crlf;
    for (char c : text) {
        if (c == '\n') crlf += '\r';
        crlf += c;
    }
    EXPECT_EQ(parse(crlf), parse(text));
}

TEST(WeatherCsv, OutOfRangeNamesLineAndField) {
    std::string text = weather_text(24);
    const auto pos = text.find("2022-03-20T07:00");
    const auto eol = text.find('\n', pos);
    text.replace(pos, eol - pos, "2022-03-20T07:00:00+01:00,8.5,101000,1.3,4.2,0.3");
    try {
        parse(text);
        FAIL() << "expected WeatherParseError";
    } catch (const io::WeatherParseError& e) {
        EXPECT_EQ(e.line(), 9);
        EXPECT_EQ(e.field(), "rel_humidity");
        EXPECT_NE(std::string(e.what()).find("rel_humidity"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find(":9"), std::string::npos);
    }
}

TEST(WeatherCsv, HeaderOnlyIsNoSamples) {
    EXPECT_THROW(parse(std::string(io::kWeatherHeader) + "\n"), io::NoSamplesError);
}

TEST(WeatherCsv, RejectsMalformedInput) {
    EXPECT_THROW(parse("timestamp,temp_c,pressure_pa,rel_humidity,wind_mps\n"), io::WeatherParseError);
    EXPECT_THROW(parse("timestamp,temp_c,pressure_pa,rel_humidity,wind_mps,cloud\n"), io::WeatherParseError);
    EXPECT_THROW(parse(""), io::WeatherParseError);

    const std::string h = std::string(io::kWeatherHeader) + "\n";
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,8,101000,0.5,4\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,warm,101000,0.5,4,0.1\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,8,-1,0.5,4,0.1\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,8,101000,0.5,-4,0.1\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,8,101000,0.5,4,1.1\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "2022-03-20T00:00:00Z,nan,101000,0.5,4,0.1\n"), io::WeatherParseError);
    EXPECT_THROW(parse(h + "yesterday,8,101000,0.5,4,0.1\n"), io::WeatherParseError);
}

TEST(WeatherCsv, RejectsNonIncreasingTimestamps) {
    const std::string h = std::string(io::kWeatherHeader) + "\n";
    const std::string row1 = "2022-03-20T01:00:00Z,8,101000,0.5,4,0.1\n";
    const std::string row0 = "2022-03-20T00:00:00Z,8,101000,0.5,4,0.1\n";
    try {
        parse(h + row1 + row0);
        FAIL();
    } catch (const io::WeatherParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.field(), "timestamp");
    }
    EXPECT_THROW(parse(h + row1 + row1), io::WeatherParseError);
    // Same instant written with a different offset is still a duplicate.
    EXPECT_THROW(parse(h + row1 + "2022-03-20T02:00:00+01:00,8,101000,0.5,4,0.1\n"), io::WeatherParseError);
}

TEST(WeatherCsv, RandomRoundTrip) {
    std::mt19937_64 rng(2022);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<atmosphere::WeatherSample> samples;
        const int offset = 15 * static_cast<int>(u(rng) * 96) - 720;
        for (int h = 0; h < 24; ++h) {
            samples.push_back({at(2022, 1 + trial % 12, 1 + trial % 28, h, offset), -40 + 90 * u(rng),
                               50000 + 60000 * u(rng), u(rng), 30 * u(rng), u(rng)});
        }
        std::ostringstream out;
        io::write_weather_csv(out, samples);
        EXPECT_EQ(parse(out.str()), samples);
    }
}

TEST(WeatherCsv, BundledFilesParse) {
    for (const char* name : {"vernal_equinox", "summer_solstice", "autumn_equinox", "winter_solstice"}) {
        const auto samples = io::parse_weather_csv(std::filesystem::path(UAVBS_DATA_DIR) / "weather" /
                                                   (std::string(name) + ".csv"));
        EXPECT_EQ(samples.size(), 24u) << name;
    }
}

TEST(Numbers, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, 124.8, 1e-300, 6.02214076e23, -2.5}) {
        double back = 0.0;
        ASSERT_TRUE(io::parse_double(io::format_number(v), back));
        EXPECT_EQ(back, v);
    }
    EXPECT_EQ(io::format_number(-0.0), "0");
    EXPECT_EQ(io::format_number(42.0), "42");
    double x = 0.0;
    EXPECT_FALSE(io::parse_double("", x));
    EXPECT_FALSE(io::parse_double("1.5x", x));
    EXPECT_FALSE(io::parse_double("inf", x));
}

TEST(LedgerCsv, RoundTrip) {
    SimulationSetup setup;
    setup.equipment = EquipmentCase::PvAndWt;
    setup.battery = BatteryConfig{500.0, 250.0, 0.9, 0.9};
    const auto ledger = simulate(setup, test::constant_series(at(2022, 6, 21, 0, 120), 24, 7.0, 0.1));

    std::ostringstream out;
    io::write_ledger_csv(out, ledger);
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              std::string(io::kLedgerHeader) + "," + std::string(io::kBatteryColumns));

    std::istringstream in(text);
    const auto back = io::parse_ledger_csv(in);
    EXPECT_EQ(back.step, ledger.step);
    ASSERT_EQ(back.records.size(), ledger.records.size());
    for (std::size_t i = 0; i < back.records.size(); ++i) {
        const auto& a = ledger.records[i];
        const auto& b = back.records[i];
        EXPECT_EQ(a.timestamp, b.timestamp);
        EXPECT_EQ(a.power.propulsion, b.power.propulsion);
        EXPECT_EQ(a.harvest.pv, b.harvest.pv);
        EXPECT_EQ(a.net_w, b.net_w);
        EXPECT_EQ(a.cumulative_consumed_wh, b.cumulative_consumed_wh);
        ASSERT_TRUE(b.battery.has_value());
        EXPECT_EQ(a.battery->soc_wh, b.battery->soc_wh);
    }

    std::ostringstream again;
    io::write_ledger_csv(again, back);
    EXPECT_EQ(again.str(), text);
}

TEST(LedgerCsv, HeaderWithoutBattery) {
    const auto ledger = simulate(SimulationSetup{}, test::constant_series(at(2022, 6, 21, 0), 2));
    std::ostringstream out;
    io::write_ledger_csv(out, ledger);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), io::kLedgerHeader);
}
