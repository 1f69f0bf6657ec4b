import numpy as np
import pytest
from antcal.errors import RankDeficientError, TooFewPairsError
from antcal.geometry import Pointing, Transform, decompose
from antcal.maxima import TrainingPair
from antcal.regress import TrainingSet, evaluate, fit


def test_recovers_noiseless_transform(day_track, alternating_transform, pair_maker):
    ts = TrainingSet(pair_maker(day_track, alternating_transform, 60))
    report = fit(ts)
    np.testing.assert_allclose(report.transform.t, alternating_transform.t, atol=1e-9)
    assert report.mae_az < 1e-9 and report.mae_el < 1e-9
    assert report.flagged == ()


def test_identity_when_pointing_is_right(day_track, pair_maker):
    ts = TrainingSet(pair_maker(day_track, Transform.identity(), 30))
    np.testing.assert_allclose(fit(ts).transform.t, np.eye(3), atol=1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_rotation_survives_noise(day_track, true_transform, pair_maker, seed):
    ts = TrainingSet(pair_maker(day_track, true_transform, 60, noise_deg=0.02, seed=seed))
    rotation = decompose(fit(ts).transform).rotation_deg
    assert rotation == pytest.approx(0.3, abs=0.02)


def test_three_pairs_fit_exactly(day_track, step_track_transform, pair_maker):
    ts = TrainingSet(pair_maker(day_track, step_track_transform, 3))
    report = fit(ts)
    assert np.abs(report.residuals).max() < 1e-9


def test_too_few_pairs(day_track, pair_maker):
    with pytest.raises(TooFewPairsError):
        TrainingSet(pair_maker(day_track, Transform.identity(), 2))


def test_collinear_pairs():
    pairs = [
        TrainingPair(float(k), Pointing(180.0 + k, 30.0 + k), Pointing(180.1 + k, 30.0 + k))
        for k in range(5)
    ]
    with pytest.raises(RankDeficientError):
        TrainingSet(pairs)


def test_least_squares_optimum(day_track, true_transform, pair_maker):
    ts = TrainingSet(pair_maker(day_track, true_transform, 40, noise_deg=0.02, seed=7))
    report = fit(ts)
    best = report.mse_az + report.mse_el
    for row in range(2):
        for col in range(3):
            for delta in (-1e-6, 1e-6):
                t = report.transform.t.copy()
                t[row, col] += delta
                other = evaluate(Transform(t), ts)
                assert other.mse_az + other.mse_el >= best


def test_evaluate_matches_fit(day_track, true_transform, pair_maker):
    ts = TrainingSet(pair_maker(day_track, true_transform, 40, noise_deg=0.02, seed=3))
    report = fit(ts)
    again = evaluate(report.transform, ts)
    assert again.rows() == report.rows()
    for mae, mse in report.rows().values():
        assert mae**2 <= mse


def test_other_transform_has_errors(day_track, step_track_transform, alternating_transform, pair_maker):
    ts = TrainingSet(pair_maker(day_track, step_track_transform, 40))
    report = evaluate(alternating_transform, ts)
    assert report.mae_az > 0.01
    assert report.mae_el > 0.01


def test_constant_shift_moves_translation(day_track, true_transform, pair_maker):
    pairs = pair_maker(day_track, true_transform, 40, noise_deg=0.02, seed=1)
    shifted = [
        TrainingPair(
            p.time,
            p.intended,
            Pointing(p.actual.azimuth_deg + 0.2, p.actual.elevation_deg - 0.1),
        )
        for p in pairs
    ]
    base = fit(TrainingSet(pairs)).transform.t
    moved = fit(TrainingSet(shifted)).transform.t
    np.testing.assert_allclose(moved[:, :2], base[:, :2], atol=1e-9)
    np.testing.assert_allclose(moved[:2, 2] - base[:2, 2], [0.2, -0.1], atol=1e-9)


def test_outlier_is_flagged(day_track, true_transform, pair_maker):
    pairs = pair_maker(day_track, true_transform, 42, noise_deg=0.01, seed=2)
    bad = pairs[20]
    pairs[20] = TrainingPair(
        bad.time, bad.intended, Pointing(bad.actual.azimuth_deg, bad.actual.elevation_deg + 1.0)
    )
    report = fit(TrainingSet(pairs))
    assert 20 in report.flagged
    assert abs(report.residuals[20, 1]) >= 0.5


def test_track_across_north():
    t = Transform.from_affine(np.array([[1.001, 0.002], [0.001, 0.999]]), (0.1, -0.05))
    pairs = []
    for i in range(20):
        az, el = 350.0 + i, 20.0 + 5.0 * np.sin(i)
        actual = t.t @ [az, el, 1.0]
        pairs.append(TrainingPair(float(i), Pointing(az, el), Pointing(actual[0], actual[1])))
    report = fit(TrainingSet(pairs))
    np.testing.assert_allclose(report.transform.t, t.t, atol=1e-9)


def scattered_pairs(t: Transform, n: int, noise_deg: float = 0.0, seed: int = 0) -> list[TrainingPair]:
    rng = np.random.default_rng(seed)
    azimuth, elevation = rng.uniform(100.0, 260.0, n), rng.uniform(0.0, 60.0, n)
    predicted = t.t @ np.vstack([azimuth, elevation, np.ones(n)])
    predicted[:2] += rng.normal(0.0, noise_deg, (2, n))
    return [
        TrainingPair(float(i), Pointing(azimuth[i], elevation[i]), Pointing(predicted[0, i], predicted[1, i]))
        for i in range(n)
    ]


def test_recovers_transform_from_scattered_pointings(alternating_transform):
    report = fit(TrainingSet(scattered_pairs(alternating_transform, 60, seed=4)))
    np.testing.assert_allclose(report.transform.t, alternating_transform.t, atol=1e-9)


def test_rotation_survives_noise_over_many_trials(true_transform):
    errors = [
        abs(decompose(fit(TrainingSet(scattered_pairs(true_transform, 60, 0.02, seed))).transform).rotation_deg - 0.3)
        for seed in range(100)
    ]
    assert max(errors) < 0.02


def test_intended_azimuth_shift_moves_only_translation(day_track, alternating_transform, pair_maker):
    c = 1.5
    pairs = pair_maker(day_track, alternating_transform, 40, noise_deg=0.02, seed=6)
    shifted = [
        TrainingPair(p.time, Pointing(p.intended.azimuth_deg + c, p.intended.elevation_deg), p.actual)
        for p in pairs
    ]
    base = fit(TrainingSet(pairs)).transform.t
    moved = fit(TrainingSet(shifted)).transform.t
    np.testing.assert_allclose(moved[:, :2], base[:, :2], atol=1e-9)
    np.testing.assert_allclose(moved[:2, 2] - base[:2, 2], [-base[0, 0] * c, -base[1, 0] * c], atol=1e-9)
