#!/usr/bin/env python3
"""Writes the bundled synthetic hourly weather days for Poznan.

The days are shaped, not measured: smooth diurnal cycles chosen so that the
summer day is long, clear and calm and the winter day is short, overcast and
windy. Output is deterministic.

    python3 tools/make_synthetic_weather.py data/weather
"""

import math
import pathlib
import sys

HEADER = "timestamp,temp_c,pressure_pa,rel_humidity,wind_mps,cloud_opacity"

# name: (date, utc offset, mean temp, temp swing, pressure, mean RH,
#        mean wind, wind swing, mean cloud, cloud swing)
SEASONS = {
    "vernal_equinox": ("2022-03-20", "+01:00", 6.0, 6.0, 102100.0, 0.70, 6.5, 3.0, 0.20, 0.10),
    "summer_solstice": ("2022-06-21", "+02:00", 22.0, 7.0, 101300.0, 0.55, 2.0, 1.0, 0.05, 0.05),
    "autumn_equinox": ("2022-09-23", "+02:00", 13.0, 5.0, 101600.0, 0.75, 4.0, 1.5, 0.45, 0.15),
    "winter_solstice": ("2022-12-21", "+01:00", -1.0, 2.5, 100600.0, 0.88, 8.5, 2.5, 0.85, 0.10),
}


def clamp(x, lo, hi):
    return max(lo, min(hi, x))


def day_rows(date, offset, t_mean, t_amp, p, rh_mean, w_mean, w_amp, c_mean, c_amp):
    rows = []
    for hour in range(24):
        # Temperature peaks mid-afternoon, wind follows it loosely.
        phase = 2.0 * math.pi * (hour - 9.0) / 24.0
        temp = t_mean + t_amp * math.sin(phase)
        rh = clamp(rh_mean - 0.15 * math.sin(phase), 0.0, 1.0)
        wind = max(0.0, w_mean + w_amp * math.sin(2.0 * math.pi * (hour - 8.0) / 24.0))
        cloud = clamp(c_mean + c_amp * math.cos(2.0 * math.pi * hour / 12.0), 0.0, 1.0)
        pressure = p + 150.0 * math.cos(2.0 * math.pi * hour / 24.0)
        rows.append(
            f"{date}T{hour:02d}:00:00{offset},{temp:.2f},{pressure:.1f},{rh:.3f},{wind:.2f},{cloud:.3f}"
        )
    return rows


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, params in SEASONS.items():
        text = "\n".join([HEADER] + day_rows(*params)) + "\n"
        (out / f"{name}.csv").write_text(text, encoding="utf-8", newline="\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/weather")
