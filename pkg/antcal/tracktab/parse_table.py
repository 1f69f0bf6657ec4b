from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from ..errors import AngleRangeError, AntcalError, MalformedLineError
from ..geometry import Pointing
from ..utils.time_of_day import format_time_of_day, parse_time_of_day
from .tracking_table import TrackPoint, TrackingTable

_CENT = Decimal("0.01")


def _format_angle(value: float) -> Decimal:
    # repr() gives the shortest decimal that round-trips, so 119.275 rounds up
    return Decimal(repr(float(value))).quantize(_CENT, rounding=ROUND_HALF_UP)


def parse(text: str) -> TrackingTable:
    """
    Parse a tracking table from its text form.

    Each record is "HH:MM:SS azimuth elevation", whitespace separated, angles in
    decimal degrees. Blank lines and lines starting with "#" are ignored.

    Parameters:
        text (str): The table text.

    Returns:
        TrackingTable: The validated table.

    Raises:
        MalformedLineError: A record does not have three valid fields.
        AngleRangeError: An azimuth is outside [0, 360) or an elevation outside
            the operational envelope.
        NonMonotonicTimeError: Times are not strictly increasing.
        PointCountError: The table has fewer than 2 or more than 100 points.
    """
    points = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 3:
            raise MalformedLineError(number, f"expected 3 fields, got {len(fields)}")
        try:
            time = parse_time_of_day(fields[0])
            azimuth, elevation = float(fields[1]), float(fields[2])
        except (AntcalError, ValueError) as err:
            raise MalformedLineError(number, str(err)) from err
        if not 0.0 <= azimuth < 360.0:
            raise AngleRangeError(f"line {number}: azimuth {azimuth} outside [0, 360)")
        try:
            pointing = Pointing(azimuth, elevation)
        except AngleRangeError as err:
            raise AngleRangeError(f"line {number}: {err}") from err
        points.append(TrackPoint(time, pointing))
    return TrackingTable(tuple(points))


def serialize(table: TrackingTable) -> str:
    """
    Write a tracking table in the text format read by parse().

    Angles are rounded half-up to two decimals; an azimuth that rounds to 360.00
    is written as 0.00.
    """
    lines = []
    for point in table.points:
        azimuth = _format_angle(point.pointing.azimuth_deg)
        if azimuth >= 360:
            azimuth -= 360
        elevation = _format_angle(point.pointing.elevation_deg)
        lines.append(f"{format_time_of_day(point.time)} {azimuth:.2f} {elevation:.2f}")
    return "\n".join(lines) + "\n"


def read_table(path: str | Path) -> TrackingTable:
    return parse(Path(path).read_text())


def write_table(table: TrackingTable, path: str | Path, header: str | None = None) -> None:
    text = serialize(table)
    if header:
        text = "".join(f"# {line}\n" for line in header.splitlines()) + text
    Path(path).write_text(text)
