from ..errors import AntcalError

SECONDS_PER_DAY = 86_400


def parse_time_of_day(text: str) -> int:
    """
    Parse an HH:MM:SS UTC time of day into seconds since midnight.

    Raises:
        AntcalError: If the text is not a valid time of day.
    """
    parts = text.strip().split(":")
    if len(parts) != 3 or not all(p.isdigit() and len(p) == 2 for p in parts):
        raise AntcalError(f"invalid time of day {text!r}, expected HH:MM:SS")
    hours, minutes, seconds = (int(p) for p in parts)
    if hours > 23 or minutes > 59 or seconds > 59:
        raise AntcalError(f"invalid time of day {text!r}")
    return hours * 3600 + minutes * 60 + seconds


def format_time_of_day(seconds: float) -> str:
    """Format seconds since midnight as HH:MM:SS (fractions are truncated)."""
    total = int(seconds)
    if not 0 <= total < SECONDS_PER_DAY:
        raise AntcalError(f"time {seconds} s is outside one calendar day")
    return f"{total // 3600:02d}:{total % 3600 // 60:02d}:{total % 60:02d}"
