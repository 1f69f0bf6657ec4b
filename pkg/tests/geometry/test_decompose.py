import numpy as np
import pytest
from antcal.errors import SingularBlockError
from antcal.geometry import AffineDecomposition, Transform, compose, decompose


def test_alternating_matrix_factors(alternating_transform):
    d = decompose(alternating_transform)
    assert d.rotation_deg == pytest.approx(0.167279, abs=5e-4)
    np.testing.assert_allclose(d.scaling, [0.997940, 0.995524], atol=1e-5)
    assert d.shear == pytest.approx(-0.002625, abs=1e-5)
    assert d.translation == (0.007442, -0.005053)


def test_step_track_rotation(step_track_transform):
    assert decompose(step_track_transform).rotation_deg == pytest.approx(0.43, abs=0.01)


def test_identity():
    d = decompose(Transform.identity())
    assert d.rotation_deg == 0.0
    assert d.scaling == (1.0, 1.0)
    assert d.shear == 0.0
    assert d.translation == (0.0, 0.0)


def test_pure_rotation():
    d = decompose(Transform.from_rotation(10.0))
    assert d.rotation_deg == pytest.approx(10.0)
    np.testing.assert_allclose(d.scaling, [1.0, 1.0])
    assert d.shear == pytest.approx(0.0, abs=1e-15)


def test_recompose(alternating_transform, step_track_transform):
    for t in (alternating_transform, step_track_transform):
        np.testing.assert_allclose(compose(decompose(t)).t, t.t, atol=1e-12, rtol=0)


def test_rotation_factor_is_orthonormal(alternating_transform):
    r = decompose(alternating_transform).r
    np.testing.assert_allclose(r.T @ r, np.eye(2), atol=1e-12)
    assert np.linalg.det(r) == pytest.approx(1.0, abs=1e-12)


def test_neutral_decomposition_composes_to_identity():
    assert compose(AffineDecomposition((0.0, 0.0), (1.0, 1.0), 0.0, 0.0)) == Transform.identity()


def test_random_round_trips():
    rng = np.random.default_rng(7)
    for _ in range(50):
        d = AffineDecomposition(
            translation=tuple(rng.uniform(-1, 1, 2)),
            scaling=tuple(rng.uniform(0.5, 2.0, 2)),
            shear=float(rng.uniform(-0.5, 0.5)),
            rotation_deg=float(rng.uniform(-179, 179)),
        )
        t = compose(d)
        again = decompose(t)
        assert again.rotation_deg == pytest.approx(d.rotation_deg, abs=1e-9)
        np.testing.assert_allclose(again.scaling, d.scaling, atol=1e-12)
        assert again.shear == pytest.approx(d.shear, abs=1e-12)
        np.testing.assert_allclose(compose(again).t, t.t, atol=1e-12, rtol=0)


def test_orientation_reversing_block():
    with pytest.raises(SingularBlockError):
        decompose(Transform.from_affine(np.diag([1.0, -1.0]), (0.0, 0.0)))


def test_describe(alternating_transform):
    text = decompose(alternating_transform).describe()
    assert "translation: 0.007442 -0.005053" in text
    assert text.splitlines()[-1].startswith("rotation_deg: 0.167")
