from dataclasses import dataclass
from functools import cached_property
from typing import Sequence
import numpy as np
import pandas as pd
from ..errors import RankDeficientError, TooFewPairsError
from ..geometry import Transform
from ..maxima import TrainingPair

MIN_PAIRS = 3


def wrap_degrees(x):
    """Angle differences wrapped to [-180, 180)."""
    return (np.asarray(x, dtype=float) + 180.0) % 360.0 - 180.0


@dataclass(frozen=True, eq=False)
class TrainingSet:
    """
    Intended/actual pointing pairs used to fit a transform.

    Intended azimuths are unwrapped in pair order onto one continuous branch and
    actual azimuths are carried onto the same branch, so tracks that cross north
    fit as a straight sweep.
    """

    pairs: tuple[TrainingPair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if len(self.pairs) < MIN_PAIRS:
            raise TooFewPairsError(
                f"need at least {MIN_PAIRS} training pairs, got {len(self.pairs)}"
            )
        if np.linalg.matrix_rank(self.design_matrix) < 3:
            raise RankDeficientError("intended pointings are collinear")

    def __len__(self) -> int:
        return len(self.pairs)

    @cached_property
    def intended(self) -> np.ndarray:
        """N x 2 intended (azimuth, elevation) on the unwrapped branch."""
        azimuth = np.unwrap([p.intended.azimuth_deg for p in self.pairs], period=360.0)
        elevation = [p.intended.elevation_deg for p in self.pairs]
        return np.column_stack([azimuth, elevation])

    @cached_property
    def actual(self) -> np.ndarray:
        """N x 2 actual (azimuth, elevation) on the branch of the intended azimuths."""
        offsets = np.array([p.offset for p in self.pairs])
        return self.intended + offsets

    @cached_property
    def design_matrix(self) -> np.ndarray:
        """Homogeneous inputs (azimuth, elevation, 1), one row per pair."""
        return np.column_stack([self.intended, np.ones(len(self.pairs))])


@dataclass(frozen=True, eq=False)
class FitReport:
    """
    A transform and its errors on a training set, per axis in degrees.

    residuals holds predicted - actual per pair (azimuth wrapped); flagged lists
    the pairs whose residual norm exceeds three times the median norm.
    """

    transform: Transform
    mae_az: float
    mse_az: float
    mae_el: float
    mse_el: float
    residuals: np.ndarray
    flagged: tuple[int, ...]

    def rows(self) -> dict[str, tuple[float, float]]:
        return {
            "azimuth": (self.mae_az, self.mse_az),
            "elevation": (self.mae_el, self.mse_el),
        }

    def residual_frame(self, ts: Sequence[TrainingPair] | TrainingSet) -> pd.DataFrame:
        pairs = ts.pairs if isinstance(ts, TrainingSet) else ts
        return pd.DataFrame(
            {
                "time_s": [p.time for p in pairs],
                "residual_az": self.residuals[:, 0],
                "residual_el": self.residuals[:, 1],
                "flagged": [i in self.flagged for i in range(len(pairs))],
            }
        )
