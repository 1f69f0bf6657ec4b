from typing import Mapping, Sequence
import numpy as np
import pandas as pd
from sklearn.metrics import mean_absolute_error, mean_squared_error
from ..errors import LengthMismatchError


def mae_mse(a: Sequence[float], b: Sequence[float]) -> tuple[float, float]:
    """
    Mean absolute error and mean squared error between two value lists.

    Raises:
        LengthMismatchError: If the lists differ in length or are empty.
    """
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.shape != b.shape or a.size == 0:
        raise LengthMismatchError(
            f"need two non-empty lists of equal length, got {a.size} and {b.size}"
        )
    return float(mean_absolute_error(a, b)), float(mean_squared_error(a, b))


def format_error_report(rows: Mapping[str, tuple[float, float]], unit: str = "deg") -> str:
    """
    Tabulate per-axis errors with six decimals, one row per axis.

    Parameters:
        rows (Mapping[str, tuple[float, float]]): Axis name to (MAE, MSE).
        unit (str): Unit shown in the column headers.

    Returns:
        str: The report text.
    """
    df = pd.DataFrame(
        [(axis, mae, mse) for axis, (mae, mse) in rows.items()],
        columns=["axis", f"MAE [{unit}]", f"MSE [{unit}]"],
    )
    return df.to_string(index=False, float_format="{:.6f}".format) + "\n"
