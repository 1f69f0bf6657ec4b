import numpy as np
import pytest
from antcal.maxima import meanshift_cluster
from antcal.maxima.meanshift_cluster import _shift


def test_singleton():
    result = meanshift_cluster([10.0], 1.0)
    assert result.centers.tolist() == [10.0]
    assert result.labels.tolist() == [0]


def test_two_groups():
    result = meanshift_cluster([1.0, 1.1, 0.9, 5.0, 5.2], 1.0)
    np.testing.assert_allclose(result.centers, [1.0, 5.1])
    assert result.labels.tolist() == [0, 0, 0, 1, 1]
    assert result.sizes.tolist() == [3, 2]
    assert result.members(1).tolist() == [3, 4]


def test_identical_points():
    result = meanshift_cluster([3.0] * 4, 0.5)
    assert result.centers.tolist() == [3.0]
    assert result.sizes.tolist() == [4]


def test_evenly_spaced_points_merge():
    result = meanshift_cluster(np.arange(0.0, 10.25, 0.25), 1.0)
    assert len(result.centers) == 1
    assert result.centers[0] == pytest.approx(5.0)


@pytest.mark.parametrize("seed", range(5))
def test_centers_are_separated_fixed_points(seed):
    points = np.random.default_rng(seed).uniform(0.0, 100.0, 60)
    bandwidth = 5.0
    result = meanshift_cluster(points, bandwidth)
    assert np.all(np.diff(result.centers) >= bandwidth / 2)
    residual = np.abs(_shift(result.centers, points, bandwidth) - result.centers)
    assert residual.max() < 1e-9
    assert result.sizes.sum() == len(points)
