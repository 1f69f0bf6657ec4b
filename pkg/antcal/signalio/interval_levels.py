import numpy as np
import pandas as pd
from .signal_series import SignalSeries


def interval_levels(series: SignalSeries, schedule: pd.DataFrame) -> pd.DataFrame:
    """
    Mean signal level per schedule block, and the gain of learned over original.

    Parameters:
        series (SignalSeries): Signal levels (raw or smoothed).
        schedule (pd.DataFrame): Blocks with "start", "end" and "label" columns.

    Returns:
        pd.DataFrame: The schedule with "n_samples" and "mean_level_dbm" added,
        plus "gain_db" on learned blocks: their mean level minus that of the
        closest preceding original block (the following one for a leading
        learned block). Blocks without samples have NaN levels.
    """
    df = schedule.reset_index(drop=True).copy()
    means, counts = [], []
    for start, end in zip(df["start"], df["end"]):
        inside = (series.times >= start) & (series.times < end)
        counts.append(int(inside.sum()))
        means.append(series.levels[inside].mean() if inside.any() else np.nan)
    df["n_samples"] = counts
    df["mean_level_dbm"] = means

    original = df["mean_level_dbm"].where(df["label"] == "original")
    reference = original.ffill().fillna(original.bfill())
    df["gain_db"] = (df["mean_level_dbm"] - reference).where(df["label"] == "learned")
    return df
