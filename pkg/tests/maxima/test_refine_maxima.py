import numpy as np
from antcal.maxima import MaximaConfig, refine_maxima
from antcal.signalio import SignalSeries


def _two_peaks() -> SignalSeries:
    t = np.arange(0.0, 1000.0)
    levels = -30.0 - 0.02 * np.minimum((t - 250.0) ** 2, (t - 750.0) ** 2 + 2.0)
    return SignalSeries(t, levels, 1.0)


def test_results_keep_input_order():
    s = _two_peaks()
    centers = [740.0, 255.0]
    windows = [(700.0, 800.0), (200.0, 300.0)]
    results = refine_maxima(s, centers, windows, MaximaConfig())
    assert [round(r.time) for r in results] == [750, 250]


def test_parallel_matches_sequential():
    s = _two_peaks()
    centers = [240.0, 745.0, 262.0, 760.0]
    windows = [(c - 50.0, c + 50.0) for c in centers]
    sequential = refine_maxima(s, centers, windows, MaximaConfig())
    parallel = refine_maxima(s, centers, windows, MaximaConfig(), max_workers=2)
    assert parallel == sequential
