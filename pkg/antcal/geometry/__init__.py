from .pointing import ELEVATION_MAX_DEG, ELEVATION_MIN_DEG, Pointing, HomogeneousPointing, normalize_azimuth
from .transform import Transform, apply, apply_arrays
from .decompose import AffineDecomposition, decompose, compose
from .angular_distance import angular_distance, angular_distance_arrays
