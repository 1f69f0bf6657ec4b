from dataclasses import dataclass, field, replace
from ..errors import AntcalError, ConfigError
from ..geometry import Pointing
from ..signalio import SmoothingConfig

SANITY_BOUND_DEG = 5.0


@dataclass(frozen=True)
class MaximaConfig:
    """
    Parameters of the maxima-detection routine.

    Bandwidths left as None are tied to the schedule by resolve(): the first
    clustering uses half a block, the merge of refined maxima a whole block.
    An unset hb_step is derived from the level curvature at each start.
    """

    smoothing: SmoothingConfig = field(default_factory=SmoothingConfig)
    curvature_threshold: float = 0.0
    meanshift_bandwidth: float | None = None
    hb_step: float | None = None
    hb_momentum: float = 0.8
    hb_max_iters: int = 200
    hb_tol: float = 0.5
    merge_bandwidth: float | None = None
    min_prominence_db: float = 0.2

    def __post_init__(self):
        if self.curvature_threshold > 0:
            raise ConfigError("curvature threshold must be zero or negative")
        for name in ("meanshift_bandwidth", "merge_bandwidth"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ConfigError(f"{name} must be positive, got {value}")
        if self.hb_step is not None and not self.hb_step > 0:
            raise ConfigError(f"heavy-ball step must be positive, got {self.hb_step}")
        if not 0 <= self.hb_momentum < 1:
            raise ConfigError(f"heavy-ball momentum must be in [0, 1), got {self.hb_momentum}")
        if self.hb_max_iters < 1:
            raise ConfigError("heavy-ball needs at least one iteration")
        if not self.hb_tol > 0:
            raise ConfigError(f"heavy-ball tolerance must be positive, got {self.hb_tol}")
        if self.min_prominence_db < 0:
            raise ConfigError("minimum prominence must not be negative")

    def resolve(self, block_duration: float) -> "MaximaConfig":
        """Fill unset bandwidths from the schedule's block duration."""
        return replace(
            self,
            meanshift_bandwidth=self.meanshift_bandwidth or block_duration / 2,
            merge_bandwidth=self.merge_bandwidth or block_duration,
        )


@dataclass(frozen=True)
class DetectedMaximum:
    time: float
    level_dbm: float
    cluster_size: int = 1
    refined: bool = False


@dataclass(frozen=True)
class TrainingPair:
    """
    An intended pointing (the original trajectory at a signal maximum) and the
    actual pointing the antenna held at that moment.
    """

    time: float
    intended: Pointing
    actual: Pointing
    label: str = ""

    def __post_init__(self):
        d_az, d_el = self.offset
        if abs(d_az) >= SANITY_BOUND_DEG or abs(d_el) >= SANITY_BOUND_DEG:
            raise AntcalError(
                f"pair at {self.time:.1f} s differs by ({d_az:.3f}, {d_el:.3f}) deg, "
                f"beyond the {SANITY_BOUND_DEG} deg sanity bound"
            )

    @property
    def offset(self) -> tuple[float, float]:
        """actual - intended, azimuth difference wrapped to [-180, 180)."""
        d_az = (self.actual.azimuth_deg - self.intended.azimuth_deg + 180.0) % 360.0 - 180.0
        return d_az, self.actual.elevation_deg - self.intended.elevation_deg
