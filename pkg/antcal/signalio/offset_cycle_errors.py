import numpy as np
import pandas as pd
from ..tracktab import TrackingTable
from .metrics import mae_mse
from .signal_series import SignalSeries


def offset_cycle_errors(
    smoothed: SignalSeries, table: TrackingTable
) -> tuple[pd.DataFrame, float, float]:
    """
    Check how close the zero-offset points of an offset-cycle table come to the
    best signal level around them.

    For every even-index track point (learned pointing, no offset) the local
    maximum of the smoothed level between the neighbouring offset points is
    compared with the smoothed level at the point itself.

    Parameters:
        smoothed (SignalSeries): Smoothed signal level recorded during the test.
        table (TrackingTable): The offset-cycle table that was tracked.

    Returns:
        tuple[pd.DataFrame, float, float]: Per-point rows ("time", "level_dbm",
        "local_max_dbm", "error_dbm"), the mean absolute error and the maximum
        error, both in dBm.
    """
    times = table.times
    rows = []
    for i in range(0, len(times), 2):
        node = times[i]
        if not smoothed.start <= node <= smoothed.end:
            continue
        lo = times[max(i - 1, 0)]
        hi = times[min(i + 1, len(times) - 1)]
        inside = (smoothed.times >= lo) & (smoothed.times <= hi)
        level = float(smoothed.level_at(node))
        local_max = max(level, float(smoothed.levels[inside].max())) if inside.any() else level
        rows.append(
            {
                "time": node,
                "level_dbm": level,
                "local_max_dbm": local_max,
                "error_dbm": local_max - level,
            }
        )
    df = pd.DataFrame(rows, columns=["time", "level_dbm", "local_max_dbm", "error_dbm"])
    if df.empty:
        return df, float("nan"), float("nan")
    mae, _ = mae_mse(df["local_max_dbm"], df["level_dbm"])
    return df, mae, float(df["error_dbm"].max())
