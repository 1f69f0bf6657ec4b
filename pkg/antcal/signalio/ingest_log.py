import io
import logging
import re
from pathlib import Path
import numpy as np
import pandas as pd
from ..errors import EmptyLogError, MalformedRecordError, NonMonotonicTimeError
from .signal_series import SignalSeries

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ["time_utc", "level_dbm"]
POINTING_COLUMNS = ["azimuth_deg", "elevation_deg"]


def _first_bad_row(mask: pd.Series) -> int:
    # header is line 1, first record line 2
    return int(np.flatnonzero(mask.to_numpy())[0]) + 2


def ingest_log(text: str) -> SignalSeries:
    """
    Parse a monitoring-system signal log.

    The log is CSV with header "time_utc,level_dbm[,azimuth_deg,elevation_deg]"
    and ISO-8601 UTC times (fractional seconds allowed). Records must already be
    in time order. The nominal rate is the inverse of the median sample spacing.

    Parameters:
        text (str): The CSV text.

    Returns:
        SignalSeries: Levels with times in seconds since midnight of the first
        record's date.

    Raises:
        EmptyLogError: The log holds no records.
        MalformedRecordError: A record misses a field or has an unparsable value.
        NonMonotonicTimeError: Record times are not strictly increasing.
    """
    try:
        df = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise EmptyLogError("signal log is empty")
    except pd.errors.ParserError as err:
        match = re.search(r"line (\d+)", str(err))
        raise MalformedRecordError(int(match.group(1)) if match else 0, str(err)) from err
    if df.empty:
        raise EmptyLogError("signal log has a header but no records")

    missing = [c for c in REQUIRED_COLUMNS if c not in df.columns]
    if missing:
        raise MalformedRecordError(1, f"header lacks columns {missing}")
    has_pointing = all(c in df.columns for c in POINTING_COLUMNS)

    stamps = pd.to_datetime(df["time_utc"], utc=True, format="ISO8601", errors="coerce")
    if stamps.isna().any():
        raise MalformedRecordError(_first_bad_row(stamps.isna()), "unparsable time_utc")

    numeric = {}
    for column in REQUIRED_COLUMNS[1:] + (POINTING_COLUMNS if has_pointing else []):
        try:
            values = df[column].astype(float).to_numpy()
        except ValueError:
            bad = pd.to_numeric(df[column], errors="coerce").isna()
            raise MalformedRecordError(_first_bad_row(bad), f"missing or invalid {column}") from None
        finite = np.isfinite(values)
        if not finite.all():
            raise MalformedRecordError(_first_bad_row(pd.Series(~finite)), f"invalid {column}")
        numeric[column] = values

    midnight = stamps.iloc[0].normalize()
    times = (stamps - midnight).dt.total_seconds().to_numpy()
    steps = np.diff(times)
    if np.any(steps <= 0):
        line = int(np.flatnonzero(steps <= 0)[0]) + 3
        raise NonMonotonicTimeError(f"line {line}: time does not increase")

    nominal_rate = 1.0 / float(np.median(steps)) if steps.size else 1.0
    series = SignalSeries(
        times,
        numeric["level_dbm"],
        nominal_rate,
        azimuth=numeric.get("azimuth_deg"),
        elevation=numeric.get("elevation_deg"),
        date=midnight.date(),
    )
    if series.gaps.size:
        logger.info("signal log has %d gaps longer than 5 sample periods", series.gaps.size)
    return series


def read_log(path: str | Path) -> SignalSeries:
    return ingest_log(Path(path).read_text())


def write_log(series: SignalSeries, path: str | Path | None = None) -> str:
    """
    Write a series in the CSV log format read by ingest_log().

    Times get microsecond resolution and levels are written with 17 significant
    digits, so whole-second series round trip exactly.

    Returns:
        str: The CSV text (also written to path when given).
    """
    midnight = pd.Timestamp(str(series.date or "2000-01-01"), tz="UTC")
    stamps = midnight + pd.to_timedelta(np.round(series.times * 1e6), unit="us")
    df = series.to_dataframe().drop(columns="time")
    df.insert(0, "time_utc", stamps.strftime("%Y-%m-%dT%H:%M:%S.%fZ"))
    text = df.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    if path is not None:
        Path(path).write_text(text)
    return text
