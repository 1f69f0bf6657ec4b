import logging
import numpy as np
import scipy.linalg
from ..geometry import Transform
from ..signalio import mae_mse
from .training_set import FitReport, TrainingSet, wrap_degrees

logger = logging.getLogger(__name__)

MAX_CONDITION = 1e8
FLAG_FACTOR = 3.0
FLAG_FLOOR_DEG = 1e-9


def _solve_normal_equations(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    gram = x.T @ x
    condition = np.linalg.cond(gram)
    logger.debug("normal equations condition number %.3e", condition)
    if condition > MAX_CONDITION:
        logger.warning(
            "normal equations are ill-conditioned (%.3e), solving by pivoted QR", condition
        )
        q, r, perm = scipy.linalg.qr(x, mode="economic", pivoting=True)
        beta = np.empty((x.shape[1], y.shape[1]))
        beta[perm] = scipy.linalg.solve_triangular(r, q.T @ y)
        return beta

    factor = scipy.linalg.cho_factor(gram)
    beta = scipy.linalg.cho_solve(factor, x.T @ y)
    # one step of iterative refinement
    beta += scipy.linalg.cho_solve(factor, x.T @ (y - x @ beta))
    return beta


def evaluate(t: Transform, ts: TrainingSet) -> FitReport:
    """
    Training errors of a fixed transform.

    The transform is applied to the intended pointings on the training set's
    unwrapped azimuth branch. Residuals are predicted - actual with azimuth
    differences wrapped to [-180, 180).

    Parameters:
        t (Transform): The transform to assess.
        ts (TrainingSet): Pairs to assess it on.

    Returns:
        FitReport: MAE/MSE per axis, residuals and flagged outliers.
    """
    predicted = (ts.design_matrix @ t.t.T)[:, :2]
    residuals = predicted - ts.actual
    residuals[:, 0] = wrap_degrees(residuals[:, 0])

    mae_az, mse_az = mae_mse(residuals[:, 0], np.zeros(len(ts)))
    mae_el, mse_el = mae_mse(residuals[:, 1], np.zeros(len(ts)))

    norms = np.hypot(residuals[:, 0], residuals[:, 1])
    threshold = max(FLAG_FACTOR * float(np.median(norms)), FLAG_FLOOR_DEG)
    flagged = tuple(int(i) for i in np.flatnonzero(norms > threshold))
    for i in flagged:
        logger.warning(
            "pair at %.1f s has residual %.4f deg (> %.4f deg)",
            ts.pairs[i].time,
            norms[i],
            threshold,
        )
    return FitReport(t, mae_az, mse_az, mae_el, mse_el, residuals, flagged)


def fit(ts: TrainingSet) -> FitReport:
    """
    Least-squares fit of the pointing correction transform.

    Rows one and two of T are two independent ordinary least-squares problems
    over the homogeneous inputs (azimuth, elevation, 1); the third row stays
    (0, 0, 1). The normal equations are solved by Cholesky, or by pivoted QR on
    the design matrix when their condition number exceeds 1e8.

    Parameters:
        ts (TrainingSet): At least three non-collinear pairs.

    Returns:
        FitReport: The fitted transform with its training errors.
    """
    beta = _solve_normal_equations(ts.design_matrix, ts.actual)
    t = np.eye(3)
    t[:2] = beta.T
    return evaluate(Transform(t), ts)
