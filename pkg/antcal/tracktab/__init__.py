from .tracking_table import TrackPoint, TrackingTable, MAX_TRACK_POINTS
from .parse_table import parse, serialize, read_table, write_table
from .interpolate import interpolate, interpolate_arrays
from .interval_plan import (
    IntervalPlan,
    realize_schedule,
    read_schedule,
    write_schedule,
)
from .generate_alternating import generate_alternating
from .generate_offset_cycle import OffsetCycleConfig, cycle_offsets, generate_offset_cycle
