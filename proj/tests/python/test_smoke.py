import math
import os
from pathlib import Path

import pytest

import uavbs

DATA = Path(os.environ.get("UAVBS_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
SEA_LEVEL = uavbs.AirState(1.225, 288.15)


def fitted(pv, wt):
    m = uavbs.MassBudget()
    m.pv_fitted = pv
    m.wt_fitted = wt
    return m


def test_model_points():
    assert uavbs.pv_power(uavbs.PvConfig(), 1000.0, 25.0) == pytest.approx(14.4, abs=1e-9)
    wt = uavbs.WtConfig()
    assert uavbs.wt_power(wt, 16.0, SEA_LEVEL) == 30.0
    assert uavbs.wt_power(wt, 20.01, SEA_LEVEL) == 0.0
    assert uavbs.irs_power(uavbs.IrsConfig()) == pytest.approx(124.8)
    assert uavbs.mimo_power(uavbs.MimoConfig()).power_amplifier == pytest.approx(15 / 0.35, abs=1e-9)

    hover = uavbs.multirotor_power(uavbs.KinematicState(), fitted(False, False), SEA_LEVEL)
    assert hover == pytest.approx(772.0, rel=5e-3)

    cruise = uavbs.KinematicState()
    cruise.velocity_mps = 10.0
    assert uavbs.fixed_wing_power(cruise, fitted(True, True), SEA_LEVEL) == pytest.approx(21.67, rel=1e-3)


def test_errors_map_to_python_exceptions():
    with pytest.raises(uavbs.FixedWingHoverError):
        uavbs.fixed_wing_power(uavbs.KinematicState(), fitted(True, True), SEA_LEVEL)
    assert issubclass(uavbs.FixedWingHoverError, uavbs.ModelPreconditionError)

    irs = uavbs.IrsConfig()
    irs.bit_resolution = 3
    with pytest.raises(uavbs.UnknownBitResolutionError):
        uavbs.irs_power(irs)

    with pytest.raises(uavbs.WeatherError):
        uavbs.simulate(uavbs.SimulationSetup(), [])


def test_simulate_bundled_day():
    weather = uavbs.parse_weather_csv(DATA / "weather" / "summer_solstice.csv")
    assert len(weather) == 24
    setup = uavbs.SimulationSetup(uavbs.Platform.Multirotor, uavbs.EquipmentCase.PV_AND_WT)
    ledger = uavbs.simulate(setup, weather)
    assert len(ledger) == 24
    last = ledger.records[-1]
    net_wh = sum(r.net_w for r in ledger.records)
    assert last.cumulative_harvested_wh - last.cumulative_consumed_wh == pytest.approx(net_wh, abs=1e-9)
    assert max(r.pv_w for r in ledger.records) > 0.0
    csv = ledger.to_csv()
    assert csv.splitlines()[0].startswith("timestamp,p_propulsion_w")
    assert csv == uavbs.simulate(setup, weather).to_csv()


def test_constructed_weather_and_normalize():
    samples = [
        uavbs.WeatherSample(f"2022-06-21T{h:02d}:00:00+02:00", 20.0, 101325.0, 0.5, 4.0, 0.0)
        for h in range(6)
    ]
    assert samples[3].timestamp == "2022-06-21T03:00:00+02:00"
    ledger = uavbs.simulate(uavbs.SimulationSetup(uavbs.Platform.FixedWing), samples)
    assert all(math.isfinite(r.consumption_w) for r in ledger.records)

    assert uavbs.normalize_series([1.0, 2.0, 4.0]) == [0.25, 0.5, 1.0]
    assert uavbs.normalize_series([0.0, 0.0]) == [0.0, 0.0]
    soc, spilled, unmet = uavbs.battery_step(90.0, 40.0, 3600, 100.0)
    assert (soc, spilled, unmet) == (100.0, 30.0, 0.0)


def test_presets_json():
    import json

    doc = json.loads(uavbs.presets_json())
    assert "summer_solstice" in json.dumps(doc)
