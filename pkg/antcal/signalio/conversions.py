import numpy as np
from ..errors import NonPositivePowerError


def dbm_from_mw(p_mw):
    """
    Convert power in milliwatts to a level in dBm: 10 * log10(P / 1 mW).

    Parameters:
        p_mw (float | np.ndarray): Power in mW, strictly positive.

    Returns:
        float | np.ndarray: Level in dBm.

    Raises:
        NonPositivePowerError: If any power is zero or negative.
    """
    p = np.asarray(p_mw, dtype=float)
    if np.any(~(p > 0)):
        raise NonPositivePowerError(f"power must be positive, got {p_mw}")
    level = 10.0 * np.log10(p)
    return float(level) if level.ndim == 0 else level


def mw_from_dbm(x_dbm):
    """Convert a level in dBm to power in milliwatts: 10 ** (x / 10)."""
    p = 10.0 ** (np.asarray(x_dbm, dtype=float) / 10.0)
    return float(p) if p.ndim == 0 else p
