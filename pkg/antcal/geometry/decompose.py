from dataclasses import dataclass
import numpy as np
import scipy.linalg
from .transform import Transform
from ..errors import SingularBlockError


@dataclass(frozen=True)
class AffineDecomposition:
    """
    Factors of an affine pointing correction with A = R @ S2 @ S1.

    S1 is diag(scaling), S2 the unit upper-triangular shear and R a
    counter-clockwise rotation by rotation_deg in the azimuth-elevation plane.
    """

    translation: tuple[float, float]
    scaling: tuple[float, float]
    shear: float
    rotation_deg: float

    @property
    def s1(self) -> np.ndarray:
        return np.diag(self.scaling)

    @property
    def s2(self) -> np.ndarray:
        return np.array([[1.0, self.shear], [0.0, 1.0]])

    @property
    def r(self) -> np.ndarray:
        angle = np.radians(self.rotation_deg)
        return np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])

    def describe(self) -> str:
        """Human-readable summary, one factor per line."""
        return "\n".join(
            [
                f"translation: {self.translation[0]:.6f} {self.translation[1]:.6f}",
                f"scaling: {self.scaling[0]:.6f} {self.scaling[1]:.6f}",
                f"shear: {self.shear:.6f}",
                f"rotation_deg: {self.rotation_deg:.6f}",
            ]
        )


def decompose(t: Transform) -> AffineDecomposition:
    """
    Split a transform into translation, scaling, shear and rotation.

    The linear block is factored as A = Q U (QR) with U upper-triangular and a
    positive diagonal, which makes the factorization unique. Then R = Q,
    S1 = diag(U) and S2 = U S1^-1.

    Parameters:
        t (Transform): The transform to decompose.

    Returns:
        AffineDecomposition: The factors; compose() inverts this.

    Raises:
        SingularBlockError: If |det A| < 1e-12 or A reverses orientation.
    """
    a = t.linear
    det = np.linalg.det(a)
    if abs(det) < 1e-12:
        raise SingularBlockError(f"linear block is singular (det={det:.3e})")
    if det < 0:
        raise SingularBlockError(
            "linear block reverses orientation and has no rotation factor"
        )

    q, u = scipy.linalg.qr(a)
    signs = np.sign(np.diag(u))
    q = q * signs
    u = signs[:, None] * u

    rotation_deg = float(np.degrees(np.arctan2(a[1, 0], a[0, 0])))
    if rotation_deg <= -180.0:
        rotation_deg += 360.0
    return AffineDecomposition(
        translation=(float(t.t[0, 2]), float(t.t[1, 2])),
        scaling=(float(u[0, 0]), float(u[1, 1])),
        shear=float(u[0, 1] / u[1, 1]),
        rotation_deg=rotation_deg,
    )


def compose(d: AffineDecomposition) -> Transform:
    """
    Rebuild the transform from its factors: A = R S2 S1, translation appended.

    Parameters:
        d (AffineDecomposition): Factors as returned by decompose().

    Returns:
        Transform: The recomposed transform.
    """
    return Transform.from_affine(d.r @ d.s2 @ d.s1, d.translation)
