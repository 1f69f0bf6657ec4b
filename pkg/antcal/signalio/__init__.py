from .conversions import dbm_from_mw, mw_from_dbm
from .signal_series import SignalSeries
from .smooth import SmoothingConfig, smooth
from .ingest_log import ingest_log, read_log, write_log
from .metrics import mae_mse, format_error_report
from .interval_levels import interval_levels
from .offset_cycle_errors import offset_cycle_errors
