from dataclasses import dataclass
from functools import cached_property
from typing import Sequence
import numpy as np
from ..errors import NonMonotonicTimeError, OutOfRangeTimeError, PointCountError
from ..geometry import Pointing
from ..utils.time_of_day import SECONDS_PER_DAY, format_time_of_day

MAX_TRACK_POINTS = 100
MIN_TRACK_POINTS = 2


@dataclass(frozen=True)
class TrackPoint:
    """One tracking-table row: UTC time of day in whole seconds and a pointing."""

    time: int
    pointing: Pointing

    def __post_init__(self):
        if int(self.time) != self.time:
            raise OutOfRangeTimeError(f"track point time {self.time} is not whole seconds")
        if not 0 <= self.time < SECONDS_PER_DAY:
            raise OutOfRangeTimeError(f"track point time {self.time} is outside one day")
        object.__setattr__(self, "time", int(self.time))


@dataclass(frozen=True)
class TrackingTable:
    """
    An ordered tracking table as uploaded to the antenna.

    Between two points the antenna interpolates each angle linearly in time.
    Times are strictly increasing and a table holds 2 to 100 points.
    """

    points: tuple[TrackPoint, ...]

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not MIN_TRACK_POINTS <= len(points) <= MAX_TRACK_POINTS:
            raise PointCountError(
                f"tracking table needs {MIN_TRACK_POINTS} to {MAX_TRACK_POINTS} "
                f"points, got {len(points)}"
            )
        for previous, current in zip(points, points[1:]):
            if current.time <= previous.time:
                raise NonMonotonicTimeError(
                    f"time {format_time_of_day(current.time)} does not follow "
                    f"{format_time_of_day(previous.time)}"
                )

    @classmethod
    def from_arrays(
        cls,
        times: Sequence[int],
        azimuth_deg: Sequence[float],
        elevation_deg: Sequence[float],
    ) -> "TrackingTable":
        return cls(
            tuple(
                TrackPoint(int(t), Pointing(float(az), float(el)))
                for t, az, el in zip(times, azimuth_deg, elevation_deg)
            )
        )

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def times(self) -> np.ndarray:
        return np.array([p.time for p in self.points], dtype=float)

    @cached_property
    def azimuth(self) -> np.ndarray:
        return np.array([p.pointing.azimuth_deg for p in self.points])

    @cached_property
    def elevation(self) -> np.ndarray:
        return np.array([p.pointing.elevation_deg for p in self.points])

    @property
    def start(self) -> int:
        return self.points[0].time

    @property
    def end(self) -> int:
        return self.points[-1].time
