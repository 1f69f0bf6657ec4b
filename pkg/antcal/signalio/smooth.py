from dataclasses import dataclass
import math
import numpy as np
from scipy.ndimage import correlate1d
from ..errors import ConfigError
from .signal_series import SignalSeries


@dataclass(frozen=True)
class SmoothingConfig:
    """
    Gaussian low-pass filter settings.

    sigma_seconds is the standard deviation in seconds of signal time (equal to
    samples at 1 Hz); truncation is the kernel half-width in sigmas.
    """

    sigma_seconds: float = 30.0
    truncation: float = 4.0

    def __post_init__(self):
        if not self.sigma_seconds > 0:
            raise ConfigError(f"sigma must be positive, got {self.sigma_seconds}")
        if not self.truncation >= 3:
            raise ConfigError(f"truncation must be at least 3 sigma, got {self.truncation}")


def gaussian_kernel(sigma_samples: float, truncation: float) -> np.ndarray:
    """Unnormalized discrete Gaussian over integer sample offsets."""
    radius = max(1, math.ceil(truncation * sigma_samples))
    offsets = np.arange(-radius, radius + 1)
    return np.exp(-0.5 * (offsets / sigma_samples) ** 2)


def smooth(s: SignalSeries, cfg: SmoothingConfig) -> SignalSeries:
    """
    Apply a Gaussian low-pass filter to a signal series.

    The kernel runs over sample indices with sigma = cfg.sigma_seconds times the
    nominal rate. Near the ends of the series and around gaps the kernel is cut
    and renormalized, so levels do not droop where data stops. Gap-separated
    segments are filtered independently.

    Parameters:
        s (SignalSeries): The raw series.
        cfg (SmoothingConfig): Filter settings.

    Returns:
        SignalSeries: The smoothed series on the same time grid.
    """
    kernel = gaussian_kernel(cfg.sigma_seconds * s.nominal_rate, cfg.truncation)
    smoothed = np.empty_like(s.levels)
    for segment in s.segments():
        values = s.levels[segment]
        weighted = correlate1d(values, kernel, mode="constant", cval=0.0)
        weights = correlate1d(np.ones_like(values), kernel, mode="constant", cval=0.0)
        smoothed[segment] = weighted / weights
    return s.with_levels(smoothed)
