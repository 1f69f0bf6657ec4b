import pandas as pd
import pytest
from antcal.errors import MalformedRecordError
from antcal.geometry import Pointing
from antcal.maxima import TrainingPair, pairs_to_frame, read_pairs, write_pairs


@pytest.fixture
def pairs():
    return [
        TrainingPair(25800.0, Pointing(115.2, 3.4), Pointing(115.31, 3.52), "transition"),
        TrainingPair(27000.5, Pointing(119.9, 9.8), Pointing(120.05, 9.71), "learned"),
        TrainingPair(28200.0, Pointing(359.9, 20.0), Pointing(0.1, 20.0)),
    ]


def test_written_pairs_read_back(tmp_path, pairs):
    path = tmp_path / "pairs.csv"
    text = write_pairs(pairs, path)
    assert text.splitlines()[0] == "time_s,intended_az,intended_el,actual_az,actual_el,label"
    assert read_pairs(path) == pairs


def test_offset_wraps_through_north(pairs):
    d_az, d_el = pairs[2].offset
    assert d_az == pytest.approx(0.2)
    assert d_el == 0.0


def test_bad_value_reports_its_line(tmp_path, pairs):
    df = pairs_to_frame(pairs).astype({"actual_el": object})
    df.loc[1, "actual_el"] = "high"
    path = tmp_path / "pairs.csv"
    df.to_csv(path, index=False)
    with pytest.raises(MalformedRecordError) as err:
        read_pairs(path)
    assert err.value.line == 3


def test_missing_column_is_a_header_error(tmp_path, pairs):
    path = tmp_path / "pairs.csv"
    pairs_to_frame(pairs).drop(columns="actual_az").to_csv(path, index=False)
    with pytest.raises(MalformedRecordError) as err:
        read_pairs(path)
    assert err.value.line == 1


def test_empty_labels_are_allowed(tmp_path):
    path = tmp_path / "pairs.csv"
    pd.DataFrame(
        {"time_s": [1.0], "intended_az": [180.0], "intended_el": [30.0],
         "actual_az": [180.1], "actual_el": [30.1]}
    ).to_csv(path, index=False)
    assert read_pairs(path)[0].label == ""
