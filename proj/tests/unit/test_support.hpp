#pragma once

#include <chrono>
#include <vector>

#include "uavbs/atmosphere.hpp"
#include "uavbs/timestamp.hpp"

namespace uavbs::test {

inline Timestamp at(int y, unsigned mo, unsigned d, int hour, int offset_min = 0) {
    using namespace std::chrono;
    return make_timestamp(year{y} / month{mo} / day{d}, hours{hour}, minutes{offset_min});
}

inline atmosphere::WeatherSample sample(Timestamp ts, double temp_c = 15.0, double pressure_pa = 101325.0,
                                        double rh = 0.5, double wind = 5.0, double cloud = 0.2) {
    return {ts, temp_c, pressure_pa, rh, wind, cloud};
}

/// Hourly series starting at `start` with identical conditions.
inline std::vector<atmosphere::WeatherSample> constant_series(Timestamp start, int n, double wind = 5.0,
                                                              double cloud = 0.2) {
    std::vector<atmosphere::WeatherSample> out;
    for (int i = 0; i < n; ++i) {
        auto ts = start;
        ts.utc += std::chrono::hours{i};
        out.push_back(sample(ts, 15.0, 101325.0, 0.5, wind, cloud));
    }
    return out;
}

}  // namespace uavbs::test
