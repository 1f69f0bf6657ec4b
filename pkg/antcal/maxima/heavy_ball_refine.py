from dataclasses import dataclass
import logging
import numpy as np
from ..signalio import SignalSeries
from .config import MaximaConfig

logger = logging.getLogger(__name__)

MAX_HALVINGS = 40
FALLBACK_HB_STEP = 25.0


@dataclass(frozen=True)
class HeavyBallResult:
    time: float
    level_dbm: float
    refined: bool
    iterations: int


def _curvature_step(s: SignalSeries, t: float, lo: float, hi: float) -> float:
    # Newton step size 1 / (2|a|) of a parabola fitted around the start
    half = (hi - lo) / 4
    mask = (s.times >= max(lo, t - half)) & (s.times <= min(hi, t + half))
    if np.count_nonzero(mask) < 3:
        logger.debug("too few samples around %.1f s for a curvature step", t)
        return FALLBACK_HB_STEP
    a = np.polyfit(s.times[mask] - t, s.levels[mask], 2)[0]
    if not a < 0:
        logger.debug("level is not concave around %.1f s, using the fallback step", t)
        return FALLBACK_HB_STEP
    return 1.0 / (-2.0 * a)


def heavy_ball_refine(
    s: SignalSeries,
    start: float,
    cfg: MaximaConfig,
    window: tuple[float, float] | None = None,
) -> HeavyBallResult:
    """
    Move a maximum estimate uphill on the interpolated signal level with the
    heavy ball method:

        t[k+1] = t[k] + hb_step * g(t[k]) + hb_momentum * (t[k] - t[k-1])

    g is the central difference of the piecewise-linear level over one sample
    period. A step that would lower the level is halved (momentum included)
    until it does not; if that fails the momentum is dropped and the plain
    gradient step is tried next. The iteration stops once a step is shorter
    than hb_tol or not even the plain gradient step gains level.

    When cfg.hb_step is None the step size is taken from the local curvature:
    a parabola is fitted to the level within a quarter of the window on either
    side of start and the step becomes 1 / (2|a|), which is the Newton step on
    that parabola. Flat or convex surroundings fall back to 25 s²/dBm.

    Parameters:
        s (SignalSeries): The smoothed series.
        start (float): Initial time in seconds, within the series span.
        cfg (MaximaConfig): Heavy-ball settings.
        window (tuple[float, float] | None): Bounds the iterates are clamped to.
            Defaults to the series span.

    Returns:
        HeavyBallResult: Final time and level. refined is false when the
        iteration hit hb_max_iters, or stopped without moving off a point that
        is not a strict local maximum (a plateau).
    """
    lo, hi = window if window is not None else (s.start, s.end)
    lo, hi = max(lo, s.start), min(hi, s.end)
    h = 1.0 / s.nominal_rate
    hb_step = cfg.hb_step
    if hb_step is None:
        hb_step = _curvature_step(s, float(np.clip(start, lo, hi)), lo, hi)

    def level(t: float) -> float:
        return float(s.level_at(t))

    def gradient(t: float) -> float:
        left, right = max(t - h / 2, s.start), min(t + h / 2, s.end)
        return (level(right) - level(left)) / (right - left)

    t_prev = t = float(np.clip(start, lo, hi))
    moved = converged = False
    iterations = 0
    for iterations in range(1, cfg.hb_max_iters + 1):
        current = level(t)
        step = hb_step * gradient(t) + cfg.hb_momentum * (t - t_prev)
        candidate = float(np.clip(t + step, lo, hi))
        for _ in range(MAX_HALVINGS):
            if level(candidate) >= current:
                break
            step /= 2
            candidate = float(np.clip(t + step, lo, hi))
        if level(candidate) < current:
            if t == t_prev:
                converged = True
                break
            # drop the momentum and retry with a plain gradient step
            t_prev = t
            continue
        t_prev, t = t, candidate
        moved = moved or t != t_prev
        if abs(t - t_prev) < cfg.hb_tol:
            converged = True
            break

    peak = level(t) > level(max(t - h, s.start)) and level(t) > level(min(t + h, s.end))
    return HeavyBallResult(
        time=t,
        level_dbm=level(t),
        refined=converged and (moved or peak),
        iterations=iterations,
    )
