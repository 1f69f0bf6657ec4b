from dataclasses import dataclass
from typing import Sequence
import numpy as np

MAX_ITER = 500
SHIFT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MeanShiftResult:
    """Sorted distinct cluster centers; labels[i] is the center index of input i."""

    centers: np.ndarray
    labels: np.ndarray

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=len(self.centers))

    def members(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.labels == k)


def _shift(modes: np.ndarray, points: np.ndarray, bandwidth: float) -> np.ndarray:
    within = np.abs(modes[:, None] - points[None, :]) <= bandwidth
    return (within * points[None, :]).sum(axis=1) / within.sum(axis=1)


def _seek(modes: np.ndarray, points: np.ndarray, bandwidth: float) -> np.ndarray:
    for _ in range(MAX_ITER):
        shifted = _shift(modes, points, bandwidth)
        done = np.max(np.abs(shifted - modes)) < SHIFT_TOL
        modes = shifted
        if done:
            break
    return modes


def _group(values: np.ndarray, gap: float) -> np.ndarray:
    """Group ids for values (any order) chained where sorted neighbours are closer than gap."""
    order = np.argsort(values, kind="stable")
    ids = np.empty(len(values), dtype=int)
    ids[order] = np.concatenate([[0], np.cumsum(np.diff(values[order]) >= gap)])
    return ids


def meanshift_cluster(times: Sequence[float], bandwidth: float) -> MeanShiftResult:
    """
    One-dimensional mean shift with a flat kernel.

    Every point moves to the mean of all input points within ±bandwidth until the
    shift drops below 1e-9 (at most 500 iterations). Modes closer than
    bandwidth / 2 are merged and the merged mode is shifted again to a fixed
    point, so each returned center is stationary under one more step.

    Parameters:
        times (Sequence[float]): Non-empty list of times in seconds.
        bandwidth (float): Kernel half-width in seconds, > 0.

    Returns:
        MeanShiftResult: Centers in ascending order with per-point membership.
    """
    points = np.asarray(times, dtype=float)
    modes = _seek(points.copy(), points, bandwidth)
    labels = _group(modes, bandwidth / 2)

    while True:
        n = labels.max() + 1
        seeds = np.array([modes[labels == k].mean() for k in range(n)])
        centers = _seek(seeds, points, bandwidth)
        merged = _group(centers, bandwidth / 2)
        if merged.max() + 1 == n:
            break
        labels = merged[labels]

    order = np.argsort(centers)
    rank = np.empty(n, dtype=int)
    rank[order] = np.arange(n)
    return MeanShiftResult(centers[order], rank[labels])
