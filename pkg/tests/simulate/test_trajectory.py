import numpy as np
import pytest
from antcal.errors import InvalidWindowError
from antcal.simulate import make_dscovr_like_trajectory


def test_day_arc(day_track):
    assert len(day_track) == 99
    assert day_track.start == 7 * 3600
    assert day_track.end == 17 * 3600
    assert day_track.elevation[0] == pytest.approx(0.0, abs=1e-12)
    assert day_track.elevation[49] == pytest.approx(60.0)
    assert day_track.azimuth[0] == pytest.approx(115.0)
    assert day_track.azimuth[-1] == pytest.approx(245.0)
    assert np.all(np.diff(day_track.azimuth) > 0)


def test_seconds_and_strings_agree():
    a = make_dscovr_like_trajectory(25200, 61200, 45.0, n_points=20)
    b = make_dscovr_like_trajectory("07:00:00", "17:00:00", 45.0, n_points=20)
    assert a == b


@pytest.mark.parametrize(
    "args",
    [
        ("17:00:00", "07:00:00", 60.0),
        ("07:00:00", "07:00:00", 60.0),
        ("07:00:00", "17:00:00", 0.0),
        ("07:00:00", "17:00:00", 90.0),
        ("07:00:00", "07:00:30", 60.0),
    ],
)
def test_invalid_window(args):
    with pytest.raises(InvalidWindowError):
        make_dscovr_like_trajectory(*args)


def test_point_count_limit():
    with pytest.raises(InvalidWindowError):
        make_dscovr_like_trajectory("07:00:00", "17:00:00", 60.0, n_points=101)
