import numpy as np
from .pointing import Pointing


def angular_distance_arrays(
    azimuth_a: np.ndarray,
    elevation_a: np.ndarray,
    azimuth_b: np.ndarray,
    elevation_b: np.ndarray,
) -> np.ndarray:
    """
    Great-circle angle between direction pairs, treating (azimuth, elevation) as
    (longitude, latitude). Uses the atan2 (Vincenty) form, which stays accurate
    for the hundredth-of-a-degree separations a pointing correction produces.

    Returns:
        np.ndarray: Angles in degrees, in [0, 180].
    """
    lon_a, lat_a = np.radians(azimuth_a), np.radians(elevation_a)
    lon_b, lat_b = np.radians(azimuth_b), np.radians(elevation_b)
    d_lon = lon_b - lon_a
    y = np.hypot(
        np.cos(lat_b) * np.sin(d_lon),
        np.cos(lat_a) * np.sin(lat_b) - np.sin(lat_a) * np.cos(lat_b) * np.cos(d_lon),
    )
    x = np.sin(lat_a) * np.sin(lat_b) + np.cos(lat_a) * np.cos(lat_b) * np.cos(d_lon)
    return np.degrees(np.arctan2(y, x))


def angular_distance(a: Pointing, b: Pointing) -> float:
    """Great-circle angle between two pointings in degrees."""
    return float(
        angular_distance_arrays(
            a.azimuth_deg, a.elevation_deg, b.azimuth_deg, b.elevation_deg
        )
    )
