import os
import numpy as np
from antcal.geometry import Transform, decompose
from antcal.maxima import extract_training_set
from antcal.regress import TrainingSet, fit, write_transform
from antcal.signalio import format_error_report, write_log
from antcal.simulate import Scenario, make_dscovr_like_trajectory, simulate
from antcal.tracktab import IntervalPlan, generate_alternating, realize_schedule, write_table
from antcal.utils import configure_logging

configure_logging()
os.makedirs("outputs", exist_ok=True)

trajectory = make_dscovr_like_trajectory("07:00:00", "17:00:00", peak_elevation_deg=60.0)
t_true = Transform.from_rotation(0.3, (0.05, -0.04))
t_cmd = Transform(np.eye(3) + 1.5 * (t_true.t - np.eye(3)))
scenario = Scenario(trajectory, t_true)

plan = IntervalPlan.alternating(600, trajectory.end - trajectory.start)
commanded = generate_alternating(trajectory, t_cmd, plan)
run = simulate(scenario, commanded)
write_table(commanded, "outputs/table.txt")
write_log(run.series, "outputs/log.csv")

result = extract_training_set(run.series, realize_schedule(trajectory, plan), trajectory, commanded)
report = fit(TrainingSet(tuple(result.pairs)))
write_transform(report.transform, "outputs/transform.txt")

print(f"{len(result.pairs)} training pairs")
print(format_error_report(report.rows()))
print(decompose(report.transform).describe())
