import warnings
import numpy as np
from scipy.signal import peak_prominences
from ..errors import SeriesTooShortError
from ..signalio import SignalSeries
from .config import DetectedMaximum, MaximaConfig

MIN_SAMPLES = 5


def second_derivative(times: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Central second differences over the actual sample spacing; NaN at both ends."""
    h0 = np.diff(times)[:-1]
    h1 = np.diff(times)[1:]
    d2 = np.full(values.shape, np.nan)
    d2[1:-1] = 2.0 * (
        (values[2:] - values[1:-1]) / h1 - (values[1:-1] - values[:-2]) / h0
    ) / (h0 + h1)
    return d2


def _regions(mask: np.ndarray) -> list[tuple[int, int]]:
    edges = np.diff(np.concatenate([[0], mask.astype(np.int8), [0]]))
    return list(zip(np.flatnonzero(edges == 1), np.flatnonzero(edges == -1)))


def preliminary_maxima(s: SignalSeries, cfg: MaximaConfig) -> list[DetectedMaximum]:
    """
    Find candidate signal-level maxima from negative curvature.

    Regions where the second derivative falls below cfg.curvature_threshold are
    scanned for their highest sample. It becomes a candidate when it is also a
    local maximum of the series and its prominence, searched within
    ±cfg.meanshift_bandwidth, reaches cfg.min_prominence_db.

    Parameters:
        s (SignalSeries): A smoothed signal series.
        cfg (MaximaConfig): Detection settings.

    Returns:
        list[DetectedMaximum]: Candidates in time order.

    Raises:
        SeriesTooShortError: The series has fewer than 5 samples.
    """
    if len(s) < MIN_SAMPLES:
        raise SeriesTooShortError(
            f"need at least {MIN_SAMPLES} samples to detect maxima, got {len(s)}"
        )
    values = s.levels
    d2 = second_derivative(s.times, values)

    peaks = []
    for lo, hi in _regions(np.nan_to_num(d2, nan=0.0) < cfg.curvature_threshold):
        i = lo + int(np.argmax(values[lo:hi]))
        if 0 < i < len(values) - 1 and values[i] >= values[i - 1] and values[i] >= values[i + 1]:
            peaks.append(i)
    if not peaks:
        return []

    peaks = np.array(peaks)
    wlen = None
    if cfg.meanshift_bandwidth is not None:
        wlen = 2 * int(np.ceil(cfg.meanshift_bandwidth * s.nominal_rate)) + 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        prominences, _, _ = peak_prominences(values, peaks, wlen=wlen)
    keep = peaks[prominences >= cfg.min_prominence_db]
    return [DetectedMaximum(float(s.times[i]), float(values[i])) for i in keep]
