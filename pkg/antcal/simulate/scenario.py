import datetime
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib  # type: ignore[no-redef]
from dataclasses import dataclass, field, fields
from pathlib import Path
import numpy as np
from ..errors import ConfigError
from ..geometry import Transform
from ..regress import read_transform
from ..tracktab import TrackingTable, read_table
from .trajectory import make_dscovr_like_trajectory

MIN_TRAJECTORY_SPAN = 3600


@dataclass(frozen=True)
class Obstacle:
    """
    An axis-aligned box in the sky that attenuates the signal while the
    satellite direction is inside it. The azimuth range wraps through north
    when azimuth_min_deg > azimuth_max_deg.
    """

    azimuth_min_deg: float
    azimuth_max_deg: float
    elevation_ceiling_deg: float
    attenuation_db: float

    def __post_init__(self):
        if not self.attenuation_db > 0:
            raise ConfigError(f"obstacle attenuation must be positive, got {self.attenuation_db}")

    def contains(self, azimuth_deg: np.ndarray, elevation_deg: np.ndarray) -> np.ndarray:
        azimuth = np.mod(azimuth_deg, 360.0)
        lo, hi = self.azimuth_min_deg % 360.0, self.azimuth_max_deg % 360.0
        if lo <= hi:
            inside = (azimuth >= lo) & (azimuth <= hi)
        else:
            inside = (azimuth >= lo) | (azimuth <= hi)
        return inside & (np.asarray(elevation_deg) <= self.elevation_ceiling_deg)


@dataclass(frozen=True)
class Scenario:
    """
    Ground truth for a simulated reception day.

    trajectory is the nominal pointing towards the satellite and t_true the
    correction that points the antenna at the signal maximum.
    """

    trajectory: TrackingTable
    t_true: Transform = field(default_factory=Transform.identity)
    hpbw_deg: float = 1.5
    peak_dbm: float = -30.0
    noise_sigma_dbm: float = 0.1
    sample_rate: float = 1.0
    rng_seed: int = 0
    date: datetime.date = datetime.date(2000, 1, 1)
    obstacles: tuple[Obstacle, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "obstacles", tuple(self.obstacles))
        if not self.hpbw_deg > 0:
            raise ConfigError(f"hpbw_deg must be positive, got {self.hpbw_deg}")
        if not self.sample_rate > 0:
            raise ConfigError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.noise_sigma_dbm < 0:
            raise ConfigError(f"noise_sigma_dbm must not be negative, got {self.noise_sigma_dbm}")
        if self.trajectory.end - self.trajectory.start < MIN_TRAJECTORY_SPAN:
            raise ConfigError("trajectory must span at least one hour")


def _trajectory(value, base: Path) -> TrackingTable:
    if isinstance(value, str):
        return read_table(base / value)
    if isinstance(value, dict):
        return make_dscovr_like_trajectory(**value)
    raise ConfigError("trajectory must be a table path or a {sunrise, sunset, peak_elevation_deg} table")


def _transform(value, base: Path) -> Transform:
    if isinstance(value, str):
        return read_transform(base / value)
    if isinstance(value, list):
        return Transform(np.array(value, dtype=float))
    if isinstance(value, dict):
        return Transform.from_rotation(
            value.get("rotation_deg", 0.0), value.get("translation", (0.0, 0.0))
        )
    raise ConfigError("t_true must be a transform path, a 3x3 array or a {rotation_deg, translation} table")


def load_scenario(path: str | Path) -> Scenario:
    """
    Read a scenario from TOML; keys are the Scenario field names.

    Paths in trajectory and t_true are relative to the scenario file.

    Raises:
        ConfigError: Unknown keys, missing trajectory or invalid values.
    """
    path = Path(path)
    try:
        with open(path, "rb") as f:
            raw = tomllib.load(f)
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f"{path}: {err}") from err

    known = {f.name for f in fields(Scenario)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"{path}: unknown scenario keys {sorted(unknown)}")
    if "trajectory" not in raw:
        raise ConfigError(f"{path}: scenario needs a trajectory")

    base = path.parent
    kwargs = dict(raw)
    kwargs["trajectory"] = _trajectory(raw["trajectory"], base)
    if "t_true" in raw:
        kwargs["t_true"] = _transform(raw["t_true"], base)
    if "date" in raw:
        kwargs["date"] = (
            raw["date"] if isinstance(raw["date"], datetime.date)
            else datetime.date.fromisoformat(raw["date"])
        )
    try:
        kwargs["obstacles"] = tuple(Obstacle(**o) for o in raw.get("obstacles", []))
        return Scenario(**kwargs)
    except TypeError as err:
        raise ConfigError(f"{path}: {err}") from err
