from .configure_logging import configure_logging, level_from_env
from .time_of_day import format_time_of_day, parse_time_of_day
