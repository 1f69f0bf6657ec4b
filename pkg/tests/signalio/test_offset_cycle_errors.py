import numpy as np
import pytest
from antcal.signalio import SignalSeries, offset_cycle_errors
from antcal.tracktab import TrackingTable

DWELL = 265


def _cycle_table() -> TrackingTable:
    times = DWELL * np.arange(17)
    return TrackingTable.from_arrays(times, np.full(17, 180.0), np.full(17, 30.0))


def _peaked_series(shift: float) -> SignalSeries:
    times = np.arange(0.0, 16 * DWELL + 1)
    peaks = 2 * DWELL * np.round((times - shift) / (2 * DWELL)) + shift
    return SignalSeries(times, -30.0 - 3.0 * ((times - peaks) / DWELL) ** 2, 1.0)


def test_peaks_on_zero_offset_points():
    df, mae, worst = offset_cycle_errors(_peaked_series(0.0), _cycle_table())
    assert len(df) == 9
    assert mae == pytest.approx(0.0, abs=1e-12)
    assert worst == pytest.approx(0.0, abs=1e-12)


def test_shifted_peaks():
    df, mae, worst = offset_cycle_errors(_peaked_series(20.0), _cycle_table())
    expected = 3.0 * (20.0 / DWELL) ** 2
    assert worst == pytest.approx(expected)
    assert (df["error_dbm"] >= 0).all()
    assert 0 < mae <= worst
