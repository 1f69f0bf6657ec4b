import numpy as np
from ..errors import InvalidWindowError
from ..tracktab import MAX_TRACK_POINTS, TrackingTable
from ..utils import parse_time_of_day

EAST_AZIMUTH_DEG = 115.0


def _seconds(value: int | str) -> int:
    return parse_time_of_day(value) if isinstance(value, str) else int(value)


def make_dscovr_like_trajectory(
    sunrise: int | str,
    sunset: int | str,
    peak_elevation_deg: float,
    n_points: int = 99,
) -> TrackingTable:
    """
    A smooth sun-like day arc for a deep-space satellite near the sun direction.

    With u running from 0 at sunrise to 1 at sunset, the azimuth is
    180 - 65 cos(pi u) (from 115 deg in the east through south to 245 deg) and
    the elevation is peak_elevation_deg * sin(pi u).

    Parameters:
        sunrise (int | str): Start as seconds since midnight or "HH:MM:SS".
        sunset (int | str): End, same forms.
        peak_elevation_deg (float): Elevation at mid-day, in (0, 90).
        n_points (int): Number of table points, 2 to 100.

    Returns:
        TrackingTable: The trajectory.

    Raises:
        InvalidWindowError: The window is empty or too short for n_points whole
            second times, or the peak elevation is out of range.
    """
    start, end = _seconds(sunrise), _seconds(sunset)
    if not start < end:
        raise InvalidWindowError(f"sunrise {sunrise} is not before sunset {sunset}")
    if not 0 < peak_elevation_deg < 90:
        raise InvalidWindowError(f"peak elevation must be in (0, 90), got {peak_elevation_deg}")
    if not 2 <= n_points <= MAX_TRACK_POINTS:
        raise InvalidWindowError(f"n_points must be 2 to {MAX_TRACK_POINTS}, got {n_points}")
    if end - start < n_points - 1:
        raise InvalidWindowError(f"{end - start} s window is too short for {n_points} points")

    u = np.linspace(0.0, 1.0, n_points)
    times = np.round(start + u * (end - start)).astype(int)
    azimuth = 180.0 - (180.0 - EAST_AZIMUTH_DEG) * np.cos(np.pi * u)
    elevation = peak_elevation_deg * np.sin(np.pi * u)
    return TrackingTable.from_arrays(times, azimuth, elevation)
