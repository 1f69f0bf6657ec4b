from dataclasses import dataclass
from typing import Sequence
import numpy as np
from .pointing import ELEVATION_MAX_DEG, ELEVATION_MIN_DEG, HomogeneousPointing, Pointing, normalize_azimuth
from ..errors import SingularBlockError

_LAST_ROW = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True, eq=False)
class Transform:
    """
    A 3x3 homogeneous pointing correction whose last row is fixed to (0, 0, 1).

    Rows act on (azimuth, elevation, 1); the upper-left 2x2 block is the linear
    part and the third column the translation, both in degrees.
    """

    t: np.ndarray

    def __post_init__(self):
        t = np.array(self.t, dtype=float)
        if t.shape != (3, 3):
            raise SingularBlockError(f"transform must be 3x3, got shape {t.shape}")
        if not np.all(np.isfinite(t)):
            raise SingularBlockError("transform has non-finite entries")
        if not np.array_equal(t[2], _LAST_ROW):
            raise SingularBlockError(f"third row must be (0, 0, 1), got {t[2]}")
        if abs(np.linalg.det(t[:2, :2])) < 1e-12:
            raise SingularBlockError("upper-left 2x2 block is singular")
        t.setflags(write=False)
        object.__setattr__(self, "t", t)

    def __eq__(self, other) -> bool:
        return isinstance(other, Transform) and np.array_equal(self.t, other.t)

    def __hash__(self) -> int:
        return hash(self.t.tobytes())

    @property
    def linear(self) -> np.ndarray:
        return self.t[:2, :2]

    @property
    def translation(self) -> np.ndarray:
        return self.t[:2, 2]

    @classmethod
    def identity(cls) -> "Transform":
        return cls(np.eye(3))

    @classmethod
    def from_affine(cls, a: np.ndarray, translation: Sequence[float]) -> "Transform":
        t = np.eye(3)
        t[:2, :2] = a
        t[:2, 2] = translation
        return cls(t)

    @classmethod
    def from_rotation(
        cls, rotation_deg: float, translation: Sequence[float] = (0.0, 0.0)
    ) -> "Transform":
        """Counter-clockwise rotation in the azimuth-elevation plane plus a translation."""
        angle = np.radians(rotation_deg)
        c, s = np.cos(angle), np.sin(angle)
        return cls.from_affine(np.array([[c, -s], [s, c]]), translation)


def apply_arrays(
    t: Transform, azimuth_deg: np.ndarray, elevation_deg: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Apply a transform to many pointings at once.

    Inputs are used on the branch they are given (no re-wrapping before the
    product); output azimuths are normalized to [0, 360) and output elevations
    are clamped to the mount range [-10, 90], so a correction near the zenith
    stops at the pole.

    Parameters:
        t (Transform): The correction transform.
        azimuth_deg (np.ndarray): Input azimuths in degrees.
        elevation_deg (np.ndarray): Input elevations in degrees.

    Returns:
        tuple[np.ndarray, np.ndarray]: Corrected azimuths and elevations.
    """
    x = np.vstack(
        [
            np.asarray(azimuth_deg, dtype=float),
            np.asarray(elevation_deg, dtype=float),
            np.ones(np.shape(azimuth_deg)),
        ]
    )
    y = t.t @ x
    return normalize_azimuth(y[0]), np.clip(y[1], ELEVATION_MIN_DEG, ELEVATION_MAX_DEG)


def apply(t: Transform, p: Pointing) -> Pointing:
    """
    Correct a single pointing: y = T x on canonical homogeneous coordinates.

    Parameters:
        t (Transform): The correction transform.
        p (Pointing): The intended pointing.

    Returns:
        Pointing: The corrected pointing, azimuth normalized to [0, 360).
        Elevation is clamped to [-10, 90] as in apply_arrays().
    """
    y = HomogeneousPointing(*(t.t @ p.to_homogeneous().as_array())).canonical()
    return Pointing(y.x1, float(np.clip(y.x2, ELEVATION_MIN_DEG, ELEVATION_MAX_DEG)))
