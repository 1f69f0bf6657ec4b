from .config import MaximaConfig, DetectedMaximum, TrainingPair
from .preliminary_maxima import preliminary_maxima
from .meanshift_cluster import MeanShiftResult, meanshift_cluster
from .heavy_ball_refine import HeavyBallResult, heavy_ball_refine
from .refine_maxima import refine_maxima
from .extract_training_set import ExtractionResult, extract_training_set
from .pairs_io import pairs_to_frame, pairs_from_frame, read_pairs, write_pairs
