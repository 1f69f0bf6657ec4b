import logging
from dataclasses import dataclass
import numpy as np
import pandas as pd
from ..errors import AntcalError, NoMaximaFoundError, SpanMismatchError
from ..signalio import SignalSeries, smooth
from ..tracktab import TrackingTable, interpolate
from .config import DetectedMaximum, MaximaConfig, TrainingPair
from .heavy_ball_refine import HeavyBallResult
from .meanshift_cluster import meanshift_cluster
from .preliminary_maxima import preliminary_maxima
from .refine_maxima import refine_maxima

logger = logging.getLogger(__name__)

DIAGNOSTIC_COLUMNS = ["stage", "time", "level_dbm"]


@dataclass(frozen=True, eq=False)
class ExtractionResult:
    """
    Training pairs with the maxima they came from.

    dropped holds the maxima whose pairs broke the sanity bound; diagnostics
    lists the candidates of every pipeline stage (stage, time, level_dbm).
    """

    pairs: list[TrainingPair]
    maxima: list[DetectedMaximum]
    dropped: list[DetectedMaximum]
    diagnostics: pd.DataFrame


def common_span(
    raw: SignalSeries,
    schedule: pd.DataFrame,
    *tables: TrackingTable,
) -> tuple[float, float]:
    """Intersection of the series, schedule and table time spans."""
    lo = max([raw.start, float(schedule["start"].min()), *(t.start for t in tables)])
    hi = min([raw.end, float(schedule["end"].max()), *(t.end for t in tables)])
    if not lo < hi:
        raise SpanMismatchError(
            f"signal log [{raw.start}, {raw.end}], schedule and tables share no time span"
        )
    return lo, hi


def restrict(s: SignalSeries, lo: float, hi: float) -> SignalSeries:
    mask = (s.times >= lo) & (s.times <= hi)
    if not mask.any():
        raise SpanMismatchError(f"signal log has no samples within [{lo}, {hi}]")
    return SignalSeries(
        s.times[mask],
        s.levels[mask],
        s.nominal_rate,
        azimuth=None if s.azimuth is None else s.azimuth[mask],
        elevation=None if s.elevation is None else s.elevation[mask],
        date=s.date,
    )


def block_label(schedule: pd.DataFrame, time: float) -> str:
    inside = (schedule["start"] <= time) & (schedule["end"] > time)
    if not inside.any():
        inside = schedule["end"] == time
    return str(schedule.loc[inside, "label"].iloc[0]) if inside.any() else ""


def _stage(name: str, times, levels) -> pd.DataFrame:
    return pd.DataFrame(
        {"stage": name, "time": np.asarray(times, dtype=float), "level_dbm": levels},
        columns=DIAGNOSTIC_COLUMNS,
    )


def extract_training_set(
    raw: SignalSeries,
    schedule: pd.DataFrame,
    original: TrackingTable,
    commanded: TrackingTable,
    cfg: MaximaConfig = MaximaConfig(),
    max_workers: int | None = None,
    progress: bool = False,
) -> ExtractionResult:
    """
    Turn a signal log recorded under an alternating table into training pairs.

    The log is cut to the span shared with the schedule and both tables, then
    smoothed. Preliminary maxima are clustered by mean shift, every cluster
    center is refined with the heavy ball method inside its cluster window, and
    the refined positions are merged by a second mean shift. At each final
    maximum the original table gives the intended pointing and the commanded
    table the pointing the antenna actually held.

    Parameters:
        raw (SignalSeries): The unsmoothed signal log.
        schedule (pd.DataFrame): Block schedule as returned by realize_schedule().
        original (TrackingTable): The nominal tracking table.
        commanded (TrackingTable): The table the antenna followed.
        cfg (MaximaConfig): Pipeline settings. Unset bandwidths are derived from
            the schedule's median block duration.
        max_workers (int | None): Processes for the refinement stage.
        progress (bool): Show a progress bar during refinement.

    Returns:
        ExtractionResult: Pairs in time order, with final maxima and diagnostics.

    Raises:
        SpanMismatchError: Log, schedule and tables do not overlap.
        NoMaximaFoundError: No preliminary maximum was detected.
    """
    lo, hi = common_span(raw, schedule, original, commanded)
    cfg = cfg.resolve(float(np.median(schedule["end"] - schedule["start"])))
    smoothed = smooth(restrict(raw, lo, hi), cfg.smoothing)

    candidates = preliminary_maxima(smoothed, cfg)
    if not candidates:
        raise NoMaximaFoundError("no signal level maxima detected in the log")
    logger.info("%d preliminary maxima", len(candidates))

    clusters = meanshift_cluster([m.time for m in candidates], cfg.meanshift_bandwidth)
    windows = [
        (max(c - cfg.meanshift_bandwidth, smoothed.start), min(c + cfg.meanshift_bandwidth, smoothed.end))
        for c in clusters.centers
    ]
    logger.info("%d clusters after the first mean shift", len(clusters.centers))

    refined: list[HeavyBallResult] = refine_maxima(
        smoothed, clusters.centers, windows, cfg, max_workers=max_workers, progress=progress
    )
    n_unrefined = sum(not r.refined for r in refined)
    if n_unrefined:
        logger.info("%d maxima did not converge during refinement", n_unrefined)

    merged = meanshift_cluster([r.time for r in refined], cfg.merge_bandwidth)
    maxima = [
        DetectedMaximum(
            time=float(center),
            level_dbm=float(smoothed.level_at(center)),
            cluster_size=int(sum(clusters.sizes[i] for i in merged.members(k))),
            refined=all(refined[i].refined for i in merged.members(k)),
        )
        for k, center in enumerate(merged.centers)
    ]
    logger.info("%d maxima after merging", len(maxima))

    pairs, kept, dropped = [], [], []
    for m in maxima:
        try:
            pair = TrainingPair(
                time=m.time,
                intended=interpolate(original, m.time),
                actual=interpolate(commanded, m.time),
                label=block_label(schedule, m.time),
            )
        except AntcalError as err:
            logger.warning("dropping maximum at %.1f s: %s", m.time, err)
            dropped.append(m)
            continue
        pairs.append(pair)
        kept.append(m)

    diagnostics = pd.concat(
        [
            _stage("preliminary", [m.time for m in candidates], [m.level_dbm for m in candidates]),
            _stage("clustered", clusters.centers, smoothed.level_at(clusters.centers)),
            _stage("refined", [r.time for r in refined], [r.level_dbm for r in refined]),
            _stage("merged", merged.centers, smoothed.level_at(merged.centers)),
        ],
        ignore_index=True,
    )
    return ExtractionResult(pairs, kept, dropped, diagnostics)
