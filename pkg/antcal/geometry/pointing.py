from dataclasses import dataclass
import math
import numpy as np
from ..errors import AngleRangeError

ELEVATION_MIN_DEG = -10.0
ELEVATION_MAX_DEG = 90.0


def normalize_azimuth(azimuth_deg):
    """
    Map azimuth values onto [0, 360).

    Parameters:
        azimuth_deg (float | np.ndarray): Azimuth in degrees, any branch.

    Returns:
        float | np.ndarray: Azimuth in [0, 360), same shape as the input.
    """
    wrapped = np.mod(azimuth_deg, 360.0)
    # np.mod can round tiny negative inputs up to exactly 360.0
    wrapped = np.where(wrapped >= 360.0, 0.0, wrapped)
    if np.ndim(wrapped) == 0:
        return float(wrapped)
    return wrapped


@dataclass(frozen=True)
class Pointing:
    """An antenna direction in degrees: azimuth clockwise from north, elevation above the horizon."""

    azimuth_deg: float
    elevation_deg: float

    def __post_init__(self):
        if not (math.isfinite(self.azimuth_deg) and math.isfinite(self.elevation_deg)):
            raise AngleRangeError(
                f"non-finite pointing ({self.azimuth_deg}, {self.elevation_deg})"
            )
        if not ELEVATION_MIN_DEG <= self.elevation_deg <= ELEVATION_MAX_DEG:
            raise AngleRangeError(
                f"elevation {self.elevation_deg} outside "
                f"[{ELEVATION_MIN_DEG}, {ELEVATION_MAX_DEG}]"
            )
        object.__setattr__(self, "azimuth_deg", normalize_azimuth(self.azimuth_deg))
        object.__setattr__(self, "elevation_deg", float(self.elevation_deg))

    def to_homogeneous(self) -> "HomogeneousPointing":
        return HomogeneousPointing(self.azimuth_deg, self.elevation_deg, 1.0)


@dataclass(frozen=True)
class HomogeneousPointing:
    """Homogeneous pointing coordinates (x1, x2, x3); x3 is the scale component."""

    x1: float
    x2: float
    x3: float = 1.0

    def __post_init__(self):
        if self.x3 == 0:
            raise AngleRangeError("homogeneous scale component must be non-zero")

    def canonical(self) -> "HomogeneousPointing":
        return HomogeneousPointing(self.x1 / self.x3, self.x2 / self.x3, 1.0)

    def equivalent(self, other: "HomogeneousPointing", tol: float = 1e-12) -> bool:
        a, b = self.canonical(), other.canonical()
        return abs(a.x1 - b.x1) <= tol and abs(a.x2 - b.x2) <= tol

    def to_pointing(self) -> Pointing:
        c = self.canonical()
        return Pointing(c.x1, c.x2)

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])
