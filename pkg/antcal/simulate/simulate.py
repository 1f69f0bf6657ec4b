from dataclasses import dataclass
import numpy as np
import pandas as pd
from ..errors import SpanMismatchError
from ..geometry import angular_distance_arrays, apply_arrays
from ..signalio import SignalSeries
from ..tracktab import TrackingTable, interpolate_arrays
from .scenario import Scenario

# level drop in dB at one beamwidth off the optimum; 3 dB at half of it
BEAM_LOSS_DB = 12.0


@dataclass(frozen=True, eq=False)
class SimOutput:
    series: SignalSeries
    commanded: TrackingTable
    truth: pd.DataFrame


def beam_level(distance_deg, hpbw_deg: float, peak_dbm: float):
    """Parabolic main lobe: peak_dbm - 12 (d / hpbw)^2."""
    return peak_dbm - BEAM_LOSS_DB * (np.asarray(distance_deg) / hpbw_deg) ** 2


def simulate(sc: Scenario, table: TrackingTable) -> SimOutput:
    """
    Simulate the monitoring log of an antenna following a tracking table.

    At every sample time the antenna points where the table interpolates to,
    while the signal peaks at apply(t_true, trajectory). The received level
    follows the beam law of the great-circle distance between the two, minus
    obstacle attenuation, plus seeded Gaussian noise.

    Parameters:
        sc (Scenario): Ground truth and signal settings.
        table (TrackingTable): The commanded table.

    Returns:
        SimOutput: The log (with commanded pointing columns), the table and the
        per-sample optimum (time, optimal_az, optimal_el, distance_deg).

    Raises:
        SpanMismatchError: The table reaches outside the trajectory span.
    """
    if table.start < sc.trajectory.start or table.end > sc.trajectory.end:
        raise SpanMismatchError(
            f"table span [{table.start}, {table.end}] exceeds trajectory span "
            f"[{sc.trajectory.start}, {sc.trajectory.end}]"
        )
    n = int(np.floor((table.end - table.start) * sc.sample_rate + 1e-9)) + 1
    times = table.start + np.arange(n) / sc.sample_rate

    commanded_az, commanded_el = interpolate_arrays(table, times)
    optimal_az, optimal_el = apply_arrays(sc.t_true, *interpolate_arrays(sc.trajectory, times))
    distance = angular_distance_arrays(commanded_az, commanded_el, optimal_az, optimal_el)

    levels = beam_level(distance, sc.hpbw_deg, sc.peak_dbm)
    for obstacle in sc.obstacles:
        levels = levels - obstacle.attenuation_db * obstacle.contains(optimal_az, optimal_el)
    rng = np.random.default_rng(sc.rng_seed)
    levels = levels + rng.normal(0.0, sc.noise_sigma_dbm, n)

    series = SignalSeries(
        times,
        levels,
        sc.sample_rate,
        azimuth=commanded_az,
        elevation=commanded_el,
        date=sc.date,
    )
    truth = pd.DataFrame(
        {
            "time": times,
            "optimal_az": optimal_az,
            "optimal_el": optimal_el,
            "distance_deg": distance,
        }
    )
    return SimOutput(series, table, truth)
