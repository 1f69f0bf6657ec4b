import datetime
import numpy as np
import pytest
from antcal.errors import ConfigError
from antcal.regress import write_transform
from antcal.simulate import Obstacle, Scenario, load_scenario, make_dscovr_like_trajectory
from antcal.tracktab import write_table


def test_defaults(day_track):
    sc = Scenario(day_track)
    assert sc.hpbw_deg == 1.5
    assert sc.peak_dbm == -30.0
    assert sc.date == datetime.date(2000, 1, 1)
    np.testing.assert_array_equal(sc.t_true.t, np.eye(3))


@pytest.mark.parametrize(
    "kwargs",
    [{"hpbw_deg": 0.0}, {"sample_rate": -1.0}, {"noise_sigma_dbm": -0.1}],
)
def test_invalid_scenario(day_track, kwargs):
    with pytest.raises(ConfigError):
        Scenario(day_track, **kwargs)


def test_short_trajectory_is_rejected():
    with pytest.raises(ConfigError):
        Scenario(make_dscovr_like_trajectory("07:00:00", "07:30:00", 20.0, n_points=10))


def test_obstacle_needs_attenuation():
    with pytest.raises(ConfigError):
        Obstacle(100.0, 130.0, 10.0, attenuation_db=0.0)


def test_load_generated_trajectory(tmp_path):
    path = tmp_path / "scenario.toml"
    path.write_text(
        """
date = 2024-06-21
noise_sigma_dbm = 0.05
rng_seed = 4

[trajectory]
sunrise = "07:00:00"
sunset = "17:00:00"
peak_elevation_deg = 60.0

[t_true]
rotation_deg = 0.3
translation = [0.05, -0.04]

[[obstacles]]
azimuth_min_deg = 100.0
azimuth_max_deg = 130.0
elevation_ceiling_deg = 10.0
attenuation_db = 6.0
"""
    )
    sc = load_scenario(path)
    assert sc.date == datetime.date(2024, 6, 21)
    assert sc.noise_sigma_dbm == 0.05
    assert sc.rng_seed == 4
    assert len(sc.trajectory) == 99
    assert sc.t_true.translation.tolist() == [0.05, -0.04]
    assert sc.obstacles == (Obstacle(100.0, 130.0, 10.0, 6.0),)


def test_load_files_relative_to_scenario(tmp_path, day_track, alternating_transform):
    (tmp_path / "data").mkdir()
    write_table(day_track, tmp_path / "data" / "track.txt")
    write_transform(alternating_transform, tmp_path / "data" / "t.txt")
    path = tmp_path / "scenario.toml"
    path.write_text('trajectory = "data/track.txt"\nt_true = "data/t.txt"\ndate = "2023-03-01"\n')
    sc = load_scenario(path)
    assert sc.trajectory.times.tolist() == day_track.times.tolist()
    np.testing.assert_allclose(sc.t_true.t, alternating_transform.t)
    assert sc.date == datetime.date(2023, 3, 1)


def test_matrix_transform(tmp_path):
    path = tmp_path / "scenario.toml"
    path.write_text(
        't_true = [[1.0, 0.0, 0.1], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]\n'
        '[trajectory]\nsunrise = 25200\nsunset = 61200\npeak_elevation_deg = 45.0\n'
    )
    assert load_scenario(path).t_true.translation.tolist() == [0.1, 0.0]


@pytest.mark.parametrize(
    "text",
    [
        'hpbw = 1.5\n[trajectory]\nsunrise = 25200\nsunset = 61200\npeak_elevation_deg = 45.0\n',
        "noise_sigma_dbm = 0.1\n",
        "trajectory = [\n",
        "trajectory = 3\n",
    ],
)
def test_bad_scenario_files(tmp_path, text):
    path = tmp_path / "scenario.toml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_scenario(path)
