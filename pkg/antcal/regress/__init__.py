from .training_set import TrainingSet, FitReport
from .fit import fit, evaluate
from .offsets import offsets_frame
from .transform_file import read_transform, write_transform, parse_transform, serialize_transform
