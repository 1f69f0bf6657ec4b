import pandas as pd
from ..geometry import Transform
from .training_set import TrainingSet


def offsets_frame(ts: TrainingSet, t: Transform) -> pd.DataFrame:
    """
    Estimated against learned offsets per training pair, in degrees.

    The estimated offset is actual - intended, the learned one is
    T(intended) - intended.

    Returns:
        pd.DataFrame: Columns time_s, estimated_az, estimated_el, learned_az,
        learned_el.
    """
    estimated = ts.actual - ts.intended
    learned = (ts.design_matrix @ t.t.T)[:, :2] - ts.intended
    return pd.DataFrame(
        {
            "time_s": [p.time for p in ts.pairs],
            "estimated_az": estimated[:, 0],
            "estimated_el": estimated[:, 1],
            "learned_az": learned[:, 0],
            "learned_el": learned[:, 1],
        }
    )
