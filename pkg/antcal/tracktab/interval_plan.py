from dataclasses import dataclass
from itertools import cycle, islice
from pathlib import Path
from typing import Literal
import math
import pandas as pd
from ..errors import InvalidPlanError, PlanOverflowError, AntcalError
from ..utils.time_of_day import format_time_of_day, parse_time_of_day
from .tracking_table import MAX_TRACK_POINTS, TrackingTable

ORIGINAL = "original"
LEARNED = "learned"
TRANSITION = "transition"
LABELS = (ORIGINAL, LEARNED, TRANSITION)

Label = Literal["original", "learned", "transition"]


@dataclass(frozen=True)
class IntervalPlan:
    """
    Sequence of equally long blocks, each using original pointings, learned
    pointings, or a transition between the two.
    """

    block_duration: int
    labels: tuple[Label, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.block_duration <= 0 or int(self.block_duration) != self.block_duration:
            raise InvalidPlanError(
                f"block duration must be a positive whole number of seconds, "
                f"got {self.block_duration}"
            )
        if not self.labels:
            raise InvalidPlanError("plan has no blocks")
        unknown = set(self.labels) - set(LABELS)
        if unknown:
            raise InvalidPlanError(f"unknown block labels {sorted(unknown)}")
        for i, label in enumerate(self.labels):
            before = self.labels[i - 1] if i > 0 else None
            after = self.labels[i + 1] if i + 1 < len(self.labels) else None
            if label == TRANSITION:
                if {before, after} != {ORIGINAL, LEARNED}:
                    raise InvalidPlanError(
                        f"transition block {i} must sit between an original and a learned block"
                    )
            elif after is not None and after != TRANSITION and after != label:
                raise InvalidPlanError(
                    f"blocks {i} and {i + 1} switch between original and learned "
                    "without a transition"
                )

    @classmethod
    def alternating(
        cls,
        block_duration: int,
        span: float,
        start: Literal["original", "learned"] = ORIGINAL,
    ) -> "IntervalPlan":
        """
        Repeating original, transition, learned, transition blocks covering span seconds.
        """
        other = LEARNED if start == ORIGINAL else ORIGINAL
        n_blocks = max(1, math.ceil(span / block_duration))
        labels = tuple(islice(cycle([start, TRANSITION, other, TRANSITION]), n_blocks))
        if labels[-1] == TRANSITION:
            labels = labels[:-1]
        return cls(int(block_duration), labels)

    def node_label(self, boundary: int) -> Label:
        """The pointing type used at the node between blocks boundary-1 and boundary."""
        neighbours = [
            self.labels[j]
            for j in (boundary - 1, boundary)
            if 0 <= j < len(self.labels) and self.labels[j] != TRANSITION
        ]
        return neighbours[0]


def realize_schedule(original: TrackingTable, plan: IntervalPlan) -> pd.DataFrame:
    """
    Lay the plan over the original table's time span.

    Blocks start at the first table time; the last block is clipped to the last
    table time and blocks beyond it are dropped.

    Parameters:
        original (TrackingTable): The table whose span the plan covers.
        plan (IntervalPlan): The block plan.

    Returns:
        pd.DataFrame: One row per realized block with columns "start", "end"
        (UTC seconds since midnight) and "label".

    Raises:
        PlanOverflowError: The realized plan needs more than 100 track points.
    """
    rows = []
    for i, label in enumerate(plan.labels):
        start = original.start + i * plan.block_duration
        if start >= original.end:
            break
        end = min(start + plan.block_duration, original.end)
        rows.append({"start": start, "end": end, "label": label})

    if len(rows) + 1 > MAX_TRACK_POINTS:
        raise PlanOverflowError(
            f"plan needs {len(rows) + 1} track points, the limit is {MAX_TRACK_POINTS}"
        )
    return pd.DataFrame(rows, columns=["start", "end", "label"])


def write_schedule(schedule: pd.DataFrame, path: str | Path | None = None) -> str:
    """Write the schedule sidecar (start_utc,end_utc,label); returns the CSV text."""
    df = pd.DataFrame(
        {
            "start_utc": schedule["start"].map(format_time_of_day),
            "end_utc": schedule["end"].map(format_time_of_day),
            "label": schedule["label"],
        }
    )
    text = df.to_csv(index=False, lineterminator="\n")
    if path is not None:
        Path(path).write_text(text)
    return text


def read_schedule(path: str | Path) -> pd.DataFrame:
    """Read a schedule sidecar written by write_schedule()."""
    df = pd.read_csv(path, dtype=str)
    missing = {"start_utc", "end_utc", "label"} - set(df.columns)
    if missing:
        raise AntcalError(f"schedule {path} lacks columns {sorted(missing)}")
    unknown = set(df["label"]) - set(LABELS)
    if unknown:
        raise AntcalError(f"schedule {path} has unknown labels {sorted(unknown)}")
    return pd.DataFrame(
        {
            "start": df["start_utc"].map(parse_time_of_day),
            "end": df["end_utc"].map(parse_time_of_day),
            "label": df["label"],
        }
    )
