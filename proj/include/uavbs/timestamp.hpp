#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace uavbs {

/// An instant with the UTC offset it was recorded in. Solar geometry only
/// ever looks at `utc`; the offset is kept so files round-trip unchanged.
struct Timestamp {
    std::chrono::sys_seconds utc{};
    std::chrono::minutes offset{0};

    friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

/// Parses `YYYY-MM-DDTHH:MM:SS` followed by `Z` or `+HH:MM` / `-HH:MM`.
/// Throws std::invalid_argument on anything else, including a missing offset.
Timestamp parse_timestamp(std::string_view text);

/// Formats in the timestamp's own offset, e.g. `2022-06-21T12:00:00+02:00`.
std::string format_timestamp(const Timestamp& ts);

/// Builds a timestamp from a local wall-clock date and time.
Timestamp make_timestamp(std::chrono::year_month_day date, std::chrono::seconds time_of_day,
                         std::chrono::minutes offset);

}  // namespace uavbs
