from pathlib import Path
from typing import Sequence
import pandas as pd
from ..errors import MalformedRecordError
from ..geometry import Pointing
from .config import TrainingPair

PAIR_COLUMNS = ["time_s", "intended_az", "intended_el", "actual_az", "actual_el", "label"]


def pairs_to_frame(pairs: Sequence[TrainingPair]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            (
                p.time,
                p.intended.azimuth_deg,
                p.intended.elevation_deg,
                p.actual.azimuth_deg,
                p.actual.elevation_deg,
                p.label,
            )
            for p in pairs
        ],
        columns=PAIR_COLUMNS,
    )


def pairs_from_frame(df: pd.DataFrame) -> list[TrainingPair]:
    """
    Build training pairs from a frame with the pairs-file columns.

    Raises:
        MalformedRecordError: A column is missing or a row does not form a valid
            pair. The line number counts the header as line 1.
    """
    missing = [c for c in PAIR_COLUMNS[:-1] if c not in df.columns]
    if missing:
        raise MalformedRecordError(1, f"pairs header lacks columns {missing}")
    labels = df["label"].fillna("").astype(str) if "label" in df.columns else [""] * len(df)

    pairs = []
    for row, label in zip(df.itertuples(index=False), labels):
        line = len(pairs) + 2
        try:
            pairs.append(
                TrainingPair(
                    time=float(row.time_s),
                    intended=Pointing(float(row.intended_az), float(row.intended_el)),
                    actual=Pointing(float(row.actual_az), float(row.actual_el)),
                    label=label,
                )
            )
        except (TypeError, ValueError) as err:
            raise MalformedRecordError(line, str(err)) from err
    return pairs


def read_pairs(path: str | Path) -> list[TrainingPair]:
    return pairs_from_frame(pd.read_csv(path, keep_default_na=False))


def write_pairs(pairs: Sequence[TrainingPair], path: str | Path | None = None) -> str:
    """Write pairs as CSV with full float precision; returns the text."""
    text = pairs_to_frame(pairs).to_csv(index=False, float_format="%.17g", lineterminator="\n")
    if path is not None:
        Path(path).write_text(text)
    return text
