from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Sequence
from tqdm import tqdm
from ..signalio import SignalSeries
from .config import MaximaConfig
from .heavy_ball_refine import HeavyBallResult, heavy_ball_refine

# Global variable for the worker processes
_series = None


def initializer(series: SignalSeries) -> None:
    global _series
    _series = series  # Each worker gets its own copy


def process_center(
    start: float, window: tuple[float, float], cfg: MaximaConfig
) -> HeavyBallResult:
    return heavy_ball_refine(_series, start, cfg, window)


def refine_maxima(
    series: SignalSeries,
    centers: Sequence[float],
    windows: Sequence[tuple[float, float]],
    cfg: MaximaConfig,
    max_workers: int | None = None,
    progress: bool = False,
) -> list[HeavyBallResult]:
    """
    Run heavy_ball_refine for every cluster center, optionally in parallel.

    Parameters:
        series (SignalSeries): The smoothed series.
        centers (Sequence[float]): Start times.
        windows (Sequence[tuple[float, float]]): Clamp window per center.
        cfg (MaximaConfig): Heavy-ball settings.
        max_workers (int | None): Worker processes. None or 1 refines in-process.
        progress (bool): Show a progress bar.

    Returns:
        list[HeavyBallResult]: One result per center, in input order.
    """
    if max_workers is None or max_workers <= 1:
        return [
            heavy_ball_refine(series, start, cfg, window)
            for start, window in tqdm(
                list(zip(centers, windows)), disable=not progress
            )
        ]

    results = [None] * len(centers)
    with ProcessPoolExecutor(
        max_workers=max_workers,
        initializer=initializer,
        initargs=(series,),
    ) as executor:
        futures = {
            executor.submit(process_center, start, window, cfg): i
            for i, (start, window) in enumerate(zip(centers, windows))
        }

        for future in tqdm(as_completed(futures), total=len(futures), disable=not progress):
            index = futures[future]
            results[index] = future.result()

    return results
