from dataclasses import dataclass, field
from datetime import date as Date
import numpy as np
import pandas as pd
from ..errors import AntcalError, EmptyLogError, NonMonotonicTimeError

GAP_FACTOR = 5.0


@dataclass(frozen=True, eq=False)
class SignalSeries:
    """
    Time-ordered signal levels from the monitoring system.

    Times are UTC seconds since midnight of `date`. When the monitoring system
    reports the antenna pointing, `azimuth` and `elevation` hold it per sample.
    """

    times: np.ndarray
    levels: np.ndarray
    nominal_rate: float
    azimuth: np.ndarray | None = None
    elevation: np.ndarray | None = None
    date: Date | None = field(default=None)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        levels = np.asarray(self.levels, dtype=float)
        if times.size == 0:
            raise EmptyLogError("signal series has no samples")
        if times.shape != levels.shape:
            raise AntcalError("times and levels differ in length")
        if not np.all(np.isfinite(levels)):
            raise AntcalError("signal series contains non-finite levels")
        if np.any(np.diff(times) <= 0):
            raise NonMonotonicTimeError("signal sample times are not strictly increasing")
        if not self.nominal_rate > 0:
            raise AntcalError(f"nominal rate must be positive, got {self.nominal_rate}")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "levels", levels)
        for name in ("azimuth", "elevation"):
            values = getattr(self, name)
            if values is not None:
                values = np.asarray(values, dtype=float)
                if values.shape != times.shape:
                    raise AntcalError(f"{name} column differs in length from times")
                object.__setattr__(self, name, values)

    def __len__(self) -> int:
        return self.times.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignalSeries):
            return False
        return (
            np.array_equal(self.times, other.times)
            and np.array_equal(self.levels, other.levels)
            and self.nominal_rate == other.nominal_rate
            and self.date == other.date
            and _optional_equal(self.azimuth, other.azimuth)
            and _optional_equal(self.elevation, other.elevation)
        )

    @property
    def start(self) -> float:
        return float(self.times[0])

    @property
    def end(self) -> float:
        return float(self.times[-1])

    @property
    def gaps(self) -> np.ndarray:
        """Indices i where the spacing to sample i + 1 exceeds five nominal periods."""
        return np.flatnonzero(np.diff(self.times) > GAP_FACTOR / self.nominal_rate)

    def segments(self) -> list[slice]:
        """Contiguous gap-free stretches of the series."""
        bounds = [0, *(self.gaps + 1), len(self)]
        return [slice(a, b) for a, b in zip(bounds, bounds[1:])]

    def with_levels(self, levels: np.ndarray) -> "SignalSeries":
        return SignalSeries(
            self.times, levels, self.nominal_rate, self.azimuth, self.elevation, self.date
        )

    def level_at(self, times) -> np.ndarray:
        """Piecewise-linearly interpolated level."""
        return np.interp(times, self.times, self.levels)

    def to_dataframe(self) -> pd.DataFrame:
        df = pd.DataFrame({"time": self.times, "level_dbm": self.levels})
        if self.azimuth is not None:
            df["azimuth_deg"] = self.azimuth
        if self.elevation is not None:
            df["elevation_deg"] = self.elevation
        return df


def _optional_equal(a: np.ndarray | None, b: np.ndarray | None) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return np.array_equal(a, b)
