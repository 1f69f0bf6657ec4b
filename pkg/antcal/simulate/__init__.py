from .scenario import Obstacle, Scenario, load_scenario
from .trajectory import make_dscovr_like_trajectory
from .simulate import SimOutput, simulate, beam_level
