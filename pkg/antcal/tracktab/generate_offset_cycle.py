from dataclasses import dataclass
import logging
import numpy as np
import pandas as pd
from ..errors import ConfigError, PlanOverflowError
from ..geometry import ELEVATION_MAX_DEG, ELEVATION_MIN_DEG, Pointing, Transform, apply_arrays
from .interpolate import interpolate_arrays
from .tracking_table import MAX_TRACK_POINTS, TrackPoint, TrackingTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OffsetCycleConfig:
    """
    Offset cycle around the learned pointing.

    Even cycle positions hold the learned pointing; odd positions deviate by
    radius_deg in a direction that turns by step_deg from one offset point to the
    next, starting at +elevation.
    """

    radius_deg: float = 0.75
    step_deg: float = 45.0
    dwell: int = 265
    cycle_length: int | None = None

    def __post_init__(self):
        if self.radius_deg <= 0:
            raise ConfigError(f"offset radius must be positive, got {self.radius_deg}")
        if self.step_deg <= 0 or not float(360.0 / self.step_deg).is_integer():
            raise ConfigError(f"offset step {self.step_deg} must divide 360")
        if self.dwell <= 0 or int(self.dwell) != self.dwell:
            raise ConfigError(f"dwell must be a positive whole number of seconds, got {self.dwell}")
        expected = 2 * int(round(360.0 / self.step_deg)) + 1
        if self.cycle_length is None:
            object.__setattr__(self, "cycle_length", expected)
        elif self.cycle_length != expected:
            raise ConfigError(
                f"cycle length {self.cycle_length} does not match step "
                f"{self.step_deg} (expected {expected})"
            )


def cycle_offsets(cfg: OffsetCycleConfig) -> pd.DataFrame:
    """
    Planar offsets for each position of one closed cycle.

    Parameters:
        cfg (OffsetCycleConfig): Cycle geometry.

    Returns:
        pd.DataFrame: Columns "index", "offset_az", "offset_el" in degrees, one
        row per position 0 .. cycle_length - 1.
    """
    index = np.arange(cfg.cycle_length)
    direction = np.radians((index - 1) // 2 * cfg.step_deg)
    odd = index % 2 == 1
    return pd.DataFrame(
        {
            "index": index,
            "offset_az": np.where(odd, cfg.radius_deg * np.sin(direction), 0.0),
            "offset_el": np.where(odd, cfg.radius_deg * np.cos(direction), 0.0),
        }
    )


def generate_offset_cycle(
    base: TrackingTable, t: Transform, cfg: OffsetCycleConfig
) -> TrackingTable:
    """
    Build an optimality-test table: learned pointings with a cyclic offset.

    Track points are cfg.dwell seconds apart from the base table's first time.
    Consecutive cycles share their closing zero-offset point; as many whole
    cycles are emitted as fit both the base span and the 100-point limit.
    Offset points that would leave the mount range [-10, 90] in elevation are
    clipped to it, so near the zenith the cycle is flattened rather than
    rejected.

    Parameters:
        base (TrackingTable): The nominal tracking table.
        t (Transform): The learned correction.
        cfg (OffsetCycleConfig): Cycle geometry.

    Returns:
        TrackingTable: The test table.

    Raises:
        PlanOverflowError: Not even one whole cycle fits.
    """
    period = cfg.cycle_length - 1
    by_points = (MAX_TRACK_POINTS - 1) // period
    by_span = (base.end - base.start) // (period * cfg.dwell)
    n_cycles = min(by_points, by_span)
    if n_cycles < 1:
        raise PlanOverflowError(
            f"one {cfg.cycle_length}-point cycle at {cfg.dwell} s per point does not "
            f"fit the table span or the {MAX_TRACK_POINTS}-point limit"
        )

    n_points = n_cycles * period + 1
    times = base.start + cfg.dwell * np.arange(n_points)
    azimuth, elevation = apply_arrays(t, *interpolate_arrays(base, times))
    offsets = cycle_offsets(cfg).iloc[np.arange(n_points) % period]
    azimuth = azimuth + offsets["offset_az"].to_numpy()
    elevation = elevation + offsets["offset_el"].to_numpy()
    outside = (elevation < ELEVATION_MIN_DEG) | (elevation > ELEVATION_MAX_DEG)
    if outside.any():
        logger.warning("clipping %d offset-cycle elevations to the mount range", int(outside.sum()))
        elevation = np.clip(elevation, ELEVATION_MIN_DEG, ELEVATION_MAX_DEG)
    return TrackingTable(
        tuple(
            TrackPoint(int(time), Pointing(az, el))
            for time, az, el in zip(times, azimuth, elevation)
        )
    )
