#include "uavbs/timestamp.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace uavbs {
namespace {

int read_digits(std::string_view text, std::size_t pos, std::size_t count) {
    if (pos + count > text.size()) {
        throw std::invalid_argument("timestamp truncated: '" + std::string(text) + "'");
    }
    int value = 0;
    auto first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + count, value);
    if (ec != std::errc{} || ptr != first + count) {
        throw std::invalid_argument("bad digits in timestamp: '" + std::string(text) + "'");
    }
    return value;
}

void expect_char(std::string_view text, std::size_t pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
        throw std::invalid_argument("malformed timestamp: '" + std::string(text) + "'");
    }
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
    using namespace std::chrono;

    const int y = read_digits(text, 0, 4);
    expect_char(text, 4, '-');
    const int mo = read_digits(text, 5, 2);
    expect_char(text, 7, '-');
    const int d = read_digits(text, 8, 2);
    expect_char(text, 10, 'T');
    const int hh = read_digits(text, 11, 2);
    expect_char(text, 13, ':');
    const int mm = read_digits(text, 14, 2);
    expect_char(text, 16, ':');
    const int ss = read_digits(text, 17, 2);

    const year_month_day date{year{y}, month{static_cast<unsigned>(mo)},
                              day{static_cast<unsigned>(d)}};
    if (!date.ok() || hh > 23 || mm > 59 || ss > 59) {
        throw std::invalid_argument("timestamp out of range: '" + std::string(text) + "'");
    }

    minutes offset{0};
    if (text.size() == 20 && text[19] == 'Z') {
        offset = minutes{0};
    } else if (text.size() == 25 && (text[19] == '+' || text[19] == '-')) {
        const int oh = read_digits(text, 20, 2);
        expect_char(text, 22, ':');
        const int om = read_digits(text, 23, 2);
        if (oh > 14 || om > 59) {
            throw std::invalid_argument("UTC offset out of range: '" + std::string(text) + "'");
        }
        offset = minutes{oh * 60 + om};
        if (text[19] == '-') offset = -offset;
    } else {
        throw std::invalid_argument("timestamp needs an explicit UTC offset: '" +
                                    std::string(text) + "'");
    }

    return make_timestamp(date, hours{hh} + minutes{mm} + seconds{ss}, offset);
}

Timestamp make_timestamp(std::chrono::year_month_day date, std::chrono::seconds time_of_day,
                         std::chrono::minutes offset) {
    using namespace std::chrono;
    const sys_seconds local_as_sys = sys_days{date} + time_of_day;
    return Timestamp{local_as_sys - offset, offset};
}

std::string format_timestamp(const Timestamp& ts) {
    using namespace std::chrono;
    const sys_seconds local = ts.utc + ts.offset;
    const auto day_start = floor<days>(local);
    const year_month_day date{day_start};
    const hh_mm_ss tod{local - day_start};

    const long off = ts.offset.count();
    const char sign = off < 0 ? '-' : '+';
    const long abs_off = off < 0 ? -off : off;

    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ld%c%02ld:%02ld",
                  static_cast<int>(date.year()), static_cast<unsigned>(date.month()),
                  static_cast<unsigned>(date.day()), static_cast<long>(tod.hours().count()),
                  static_cast<long>(tod.minutes().count()),
                  static_cast<long>(tod.seconds().count()), sign, abs_off / 60, abs_off % 60);
    return buf;
}

}  // namespace uavbs
