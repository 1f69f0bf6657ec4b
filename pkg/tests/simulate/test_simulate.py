import numpy as np
import pytest
from antcal.errors import SpanMismatchError
from antcal.geometry import Transform, apply_arrays
from antcal.signalio import ingest_log, write_log
from antcal.simulate import Obstacle, Scenario, beam_level, simulate
from antcal.tracktab import TrackingTable, interpolate_arrays


def test_beam_law():
    assert beam_level(0.0, 1.5, -30.0) == -30.0
    assert beam_level(0.75, 1.5, -30.0) == pytest.approx(-33.0)
    assert beam_level(1.5, 1.5, -30.0) == pytest.approx(-42.0)


def test_perfect_pointing_gives_peak_level(day_track):
    out = simulate(Scenario(day_track, noise_sigma_dbm=0.0), day_track)
    assert len(out.series) == day_track.end - day_track.start + 1
    np.testing.assert_allclose(out.series.levels, -30.0, atol=1e-9)
    np.testing.assert_allclose(out.truth["distance_deg"], 0.0, atol=1e-6)


def test_log_carries_commanded_pointing(day_track, true_transform):
    out = simulate(Scenario(day_track, t_true=true_transform), day_track)
    az, el = interpolate_arrays(day_track, out.series.times)
    np.testing.assert_allclose(out.series.azimuth, az)
    np.testing.assert_allclose(out.series.elevation, el)
    assert list(out.truth.columns) == ["time", "optimal_az", "optimal_el", "distance_deg"]


def test_same_seed_same_log(day_track, true_transform):
    sc = Scenario(day_track, t_true=true_transform, rng_seed=11)
    assert simulate(sc, day_track).series == simulate(sc, day_track).series
    other = Scenario(day_track, t_true=true_transform, rng_seed=12)
    assert simulate(other, day_track).series != simulate(sc, day_track).series


def test_noise_level(day_track):
    out = simulate(Scenario(day_track, noise_sigma_dbm=0.1, rng_seed=3), day_track)
    assert np.std(out.series.levels) == pytest.approx(0.1, rel=0.05)


def test_obstacle_attenuates_while_satellite_is_behind_it(day_track):
    # trees in the east up to 10 deg elevation
    trees = Obstacle(100.0, 130.0, 10.0, attenuation_db=6.0)
    out = simulate(Scenario(day_track, noise_sigma_dbm=0.0, obstacles=[trees]), day_track)
    behind = trees.contains(out.truth["optimal_az"].to_numpy(), out.truth["optimal_el"].to_numpy())
    assert behind.any() and not behind.all()
    np.testing.assert_allclose(out.series.levels[behind], -36.0, atol=1e-9)
    np.testing.assert_allclose(out.series.levels[~behind], -30.0, atol=1e-9)


def test_obstacle_range_through_north():
    north = Obstacle(350.0, 10.0, 20.0, attenuation_db=3.0)
    inside = north.contains(np.array([355.0, 5.0, 180.0, 0.0]), np.array([5.0, 5.0, 5.0, 25.0]))
    assert inside.tolist() == [True, True, False, False]


def test_table_outside_the_trajectory(day_track):
    late = TrackingTable.from_arrays([day_track.end - 100, day_track.end + 100], [240.0, 245.0], [2.0, 0.5])
    with pytest.raises(SpanMismatchError):
        simulate(Scenario(day_track), late)


def test_level_peaks_where_the_antenna_points_at_the_optimum(day_track, true_transform):
    # a fixed grid of offsets around the original pointing; the best one is
    # the one closest to the true correction
    sc = Scenario(day_track, t_true=true_transform, noise_sigma_dbm=0.0)
    t_mid = (day_track.start + day_track.end) / 2
    candidates = [
        Transform.from_rotation(0.0, (d_az, d_el))
        for d_az in np.linspace(-1.0, 1.0, 9)
        for d_el in np.linspace(-1.0, 1.0, 9)
    ]
    levels = []
    for t in candidates:
        table = TrackingTable.from_arrays(
            day_track.times, *apply_arrays(t, day_track.azimuth, day_track.elevation)
        )
        out = simulate(sc, table)
        levels.append(out.series.level_at(t_mid))
    best = candidates[int(np.argmax(levels))]
    optimum = out.truth.loc[out.truth["time"] == t_mid, ["optimal_az", "optimal_el"]].to_numpy()[0]
    az, el = interpolate_arrays(day_track, [t_mid])
    assert best.translation[0] == pytest.approx(optimum[0] - az[0], abs=0.125)
    assert best.translation[1] == pytest.approx(optimum[1] - el[0], abs=0.125)


def test_log_round_trip(day_track, true_transform):
    out = simulate(Scenario(day_track, t_true=true_transform, rng_seed=5), day_track)
    assert ingest_log(write_log(out.series)) == out.series
