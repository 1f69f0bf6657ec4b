import numpy as np
from ..errors import OutOfRangeTimeError
from ..geometry import Pointing, normalize_azimuth
from .tracking_table import TrackingTable


def interpolate_arrays(
    table: TrackingTable, times: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Pointing the antenna holds at the given times, as it interpolates the table.

    Azimuth is interpolated on an unwrapped branch, so a track crossing north
    moves through 0 rather than sweeping back across the sky.

    Parameters:
        table (TrackingTable): The tracking table.
        times (np.ndarray): UTC seconds since midnight, within the table span.

    Returns:
        tuple[np.ndarray, np.ndarray]: Azimuths (normalized) and elevations.

    Raises:
        OutOfRangeTimeError: A time lies outside [first, last] table time.
    """
    times = np.asarray(times, dtype=float)
    if times.size and (times.min() < table.start or times.max() > table.end):
        raise OutOfRangeTimeError(
            f"times [{times.min()}, {times.max()}] outside table span "
            f"[{table.start}, {table.end}]"
        )
    azimuth = np.unwrap(table.azimuth, period=360.0)
    return (
        normalize_azimuth(np.interp(times, table.times, azimuth)),
        np.interp(times, table.times, table.elevation),
    )


def interpolate(table: TrackingTable, at: float) -> Pointing:
    """
    Pointing at a single time; exact at table nodes.

    Raises:
        OutOfRangeTimeError: If at lies outside the table span.
    """
    azimuth, elevation = interpolate_arrays(table, np.array([at]))
    return Pointing(float(azimuth[0]), float(elevation[0]))
