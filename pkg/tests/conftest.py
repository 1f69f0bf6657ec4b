import numpy as np
import pytest
from antcal.geometry import Pointing, Transform
from antcal.maxima import TrainingPair
from antcal.simulate import make_dscovr_like_trajectory
from antcal.tracktab import interpolate_arrays

# learned from step-track training data
STEP_TRACK_MATRIX = [
    [0.994773, -0.017231, 0.022903],
    [0.007398, 0.992050, -0.016989],
    [0.0, 0.0, 1.0],
]

# learned from the 10-minute alternating experiment
ALTERNATING_MATRIX = [
    [0.997936, -0.005520, 0.007442],
    [0.002914, 0.995512, -0.005053],
    [0.0, 0.0, 1.0],
]

TABLE_EXCERPT = """\
07:18:21 114.67 0.00
07:29:45 116.97 1.53
07:41:09 119.28 3.03
"""


@pytest.fixture
def step_track_transform() -> Transform:
    return Transform(np.array(STEP_TRACK_MATRIX))


@pytest.fixture
def alternating_transform() -> Transform:
    return Transform(np.array(ALTERNATING_MATRIX))


@pytest.fixture
def table_excerpt() -> str:
    return TABLE_EXCERPT


@pytest.fixture
def day_track():
    return make_dscovr_like_trajectory("07:00:00", "17:00:00", peak_elevation_deg=60.0)


@pytest.fixture
def true_transform() -> Transform:
    return Transform.from_rotation(0.3, (0.05, -0.04))


def make_pairs(table, t: Transform, n: int, noise_deg: float = 0.0, seed: int = 0):
    """Pairs along a table whose actual pointing is T applied to the intended one."""
    rng = np.random.default_rng(seed)
    times = np.linspace(table.start + 60, table.end - 60, n)
    azimuth, elevation = interpolate_arrays(table, times)
    predicted = t.t @ np.vstack([azimuth, elevation, np.ones(n)])
    noise = rng.normal(0.0, noise_deg, (2, n))
    return [
        TrainingPair(
            float(time),
            Pointing(az, el),
            Pointing(predicted[0, i] + noise[0, i], predicted[1, i] + noise[1, i]),
        )
        for i, (time, az, el) in enumerate(zip(times, azimuth, elevation))
    ]


@pytest.fixture
def pair_maker():
    return make_pairs
