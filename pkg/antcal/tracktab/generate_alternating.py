from ..geometry import Pointing, Transform, apply_arrays
from .interpolate import interpolate_arrays
from .interval_plan import LEARNED, IntervalPlan, realize_schedule
from .tracking_table import TrackPoint, TrackingTable


def generate_alternating(
    original: TrackingTable, t: Transform, plan: IntervalPlan
) -> TrackingTable:
    """
    Build a calibration table alternating original and learned pointings.

    One track point is emitted per block boundary. Nodes next to an original
    block carry the interpolated original pointing, nodes next to a learned block
    carry apply(t, original). Transition blocks get no interior nodes, so the
    antenna's own linear interpolation blends the two across them.

    Parameters:
        original (TrackingTable): The nominal tracking table.
        t (Transform): The correction used for learned blocks.
        plan (IntervalPlan): Block layout; see realize_schedule() for its sidecar.

    Returns:
        TrackingTable: The table to upload.

    Raises:
        PlanOverflowError: The plan needs more than 100 track points.
    """
    schedule = realize_schedule(original, plan)
    times = [*schedule["start"], schedule["end"].iloc[-1]]
    azimuth, elevation = interpolate_arrays(original, times)
    learned_az, learned_el = apply_arrays(t, azimuth, elevation)

    points = []
    for boundary, time in enumerate(times):
        if plan.node_label(boundary) == LEARNED:
            pointing = Pointing(learned_az[boundary], learned_el[boundary])
        else:
            pointing = Pointing(azimuth[boundary], elevation[boundary])
        points.append(TrackPoint(int(time), pointing))
    return TrackingTable(tuple(points))
