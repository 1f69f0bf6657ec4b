import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib  # type: ignore[no-redef]
from dataclasses import replace
from pathlib import Path
import click
from .errors import AntcalError, NoMaximaFoundError
from .geometry import Transform, decompose
from .maxima import MaximaConfig, extract_training_set, read_pairs, write_pairs
from .regress import TrainingSet, evaluate, fit, offsets_frame, read_transform, write_transform
from .signalio import (
    SmoothingConfig,
    format_error_report,
    interval_levels,
    offset_cycle_errors,
    read_log,
    smooth,
    write_log,
)
from .simulate import load_scenario, simulate
from .tracktab import (
    IntervalPlan,
    OffsetCycleConfig,
    cycle_offsets,
    generate_alternating,
    generate_offset_cycle,
    read_schedule,
    read_table,
    realize_schedule,
    write_schedule,
    write_table,
)
from .utils import configure_logging

input_file = click.Path(exists=True, dir_okay=False, path_type=Path)
out_option = click.option(
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("."),
    show_default=True,
    help="Directory for output files.",
)


def _load_config(ctx: click.Context, param: click.Parameter, value: Path | None) -> None:
    if value is None:
        return
    try:
        with open(value, "rb") as f:
            ctx.default_map = tomllib.load(f)
    except tomllib.TOMLDecodeError as err:
        raise click.BadParameter(str(err), ctx=ctx, param=param)


def _output_dir(out: Path) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    return out


class AntcalGroup(click.Group):
    """Reports package errors as one line on stderr with the error's exit code."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except AntcalError as err:
            click.echo(f"error: {err}", err=True)
            ctx.exit(err.exit_code)


@click.group(cls=AntcalGroup)
@click.option(
    "--config",
    type=input_file,
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="TOML file whose [<command>] tables set option defaults.",
)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
def cli(verbose: int):
    """Antenna pointing calibration from signal level logs."""
    configure_logging({0: None, 1: logging.INFO}.get(verbose, logging.DEBUG))


@cli.command("fit")
@click.argument("pairs", type=input_file)
@out_option
def fit_command(pairs: Path, out: Path):
    """Fit a transform to training pairs."""
    ts = TrainingSet(tuple(read_pairs(pairs)))
    report = fit(ts)
    out = _output_dir(out)
    write_transform(report.transform, out / "transform.txt", header=f"fitted on {len(ts)} pairs")
    text = format_error_report(report.rows())
    (out / "report.txt").write_text(text)
    offsets_frame(ts, report.transform).to_csv(out / "offsets.csv", index=False)
    click.echo(text, nl=False)


@cli.command("evaluate")
@click.argument("transform", type=input_file)
@click.argument("pairs", type=input_file)
@out_option
def evaluate_command(transform: Path, pairs: Path, out: Path):
    """Training errors of an existing transform on a pairs file."""
    report = evaluate(read_transform(transform), TrainingSet(tuple(read_pairs(pairs))))
    text = format_error_report(report.rows())
    (_output_dir(out) / "report.txt").write_text(text)
    click.echo(text, nl=False)


@cli.command("extract")
@click.argument("log", type=input_file)
@click.argument("schedule", type=input_file)
@click.argument("original", type=input_file)
@click.argument("commanded", type=input_file)
@click.option("--sigma", type=float, default=30.0, show_default=True, help="Smoothing sigma in seconds.")
@click.option("--bandwidth", type=float, default=None, help="Mean-shift bandwidth in seconds [default: half a block].")
@click.option("--merge-bandwidth", type=float, default=None, help="Merge bandwidth in seconds [default: one block].")
@click.option("--hb-step", type=float, default=None, help="[default: from the local curvature]")
@click.option("--hb-momentum", type=float, default=0.8, show_default=True)
@click.option("--workers", type=int, default=None, help="Processes for maxima refinement.")
@out_option
def extract_command(
    log: Path,
    schedule: Path,
    original: Path,
    commanded: Path,
    sigma: float,
    bandwidth: float | None,
    merge_bandwidth: float | None,
    hb_step: float | None,
    hb_momentum: float,
    workers: int | None,
    out: Path,
):
    """Detect signal maxima and write training pairs."""
    cfg = MaximaConfig(
        smoothing=SmoothingConfig(sigma_seconds=sigma),
        meanshift_bandwidth=bandwidth,
        merge_bandwidth=merge_bandwidth,
        hb_step=hb_step,
        hb_momentum=hb_momentum,
    )
    series = read_log(log)
    blocks = read_schedule(schedule)
    result = extract_training_set(
        series,
        blocks,
        read_table(original),
        read_table(commanded),
        cfg,
        max_workers=workers,
    )
    if not result.pairs:
        raise NoMaximaFoundError(
            f"all {len(result.dropped)} detected maxima were dropped, no training pairs to write"
        )
    out = _output_dir(out)
    write_pairs(result.pairs, out / "pairs.csv")
    result.diagnostics.to_csv(out / "diagnostics.csv", index=False)
    interval_levels(smooth(series, cfg.smoothing), blocks).to_csv(out / "levels.csv", index=False)
    click.echo(f"{len(result.pairs)} training pairs, {len(result.dropped)} dropped")


@cli.command("gen-table")
@click.argument("original", type=input_file)
@click.option("--transform", "transform_path", type=input_file, default=None, help="Learned transform [default: identity].")
@click.option(
    "--mode",
    type=click.Choice(["alternating", "offset-cycle"]),
    default="alternating",
    show_default=True,
)
@click.option("--block-minutes", type=float, default=10.0, show_default=True)
@click.option("--start", type=click.Choice(["original", "learned"]), default="original", show_default=True)
@click.option("--radius", type=float, default=0.75, show_default=True, help="Offset radius in degrees.")
@click.option("--alpha", type=float, default=45.0, show_default=True, help="Offset direction step in degrees.")
@click.option("--dwell", type=int, default=265, show_default=True, help="Seconds per offset-cycle point.")
@out_option
def gen_table_command(
    original: Path,
    transform_path: Path | None,
    mode: str,
    block_minutes: float,
    start: str,
    radius: float,
    alpha: float,
    dwell: int,
    out: Path,
):
    """Generate an alternating or offset-cycle tracking table."""
    table = read_table(original)
    t = read_transform(transform_path) if transform_path else Transform.identity()
    out = _output_dir(out)

    if mode == "alternating":
        block = round(block_minutes * 60)
        plan = IntervalPlan.alternating(block, table.end - table.start, start=start)
        generated = generate_alternating(table, t, plan)
        write_schedule(realize_schedule(table, plan), out / "schedule.csv")
    else:
        cfg = OffsetCycleConfig(radius_deg=radius, step_deg=alpha, dwell=dwell)
        generated = generate_offset_cycle(table, t, cfg)
        period = cfg.cycle_length - 1
        offsets = cycle_offsets(cfg)
        rows = offsets.iloc[[i % period for i in range(len(generated))]].reset_index(drop=True)
        rows.insert(0, "time_s", generated.times.astype(int))
        rows.to_csv(out / "cycle.csv", index=False)

    write_table(generated, out / "table.txt", header=f"{mode} table from {original.name}")
    click.echo(f"{len(generated)} track points")


@cli.command("simulate")
@click.argument("scenario", type=input_file)
@click.argument("table", type=input_file)
@click.option("--seed", type=int, default=None, help="Override the scenario's rng_seed.")
@out_option
def simulate_command(scenario: Path, table: Path, seed: int | None, out: Path):
    """Simulate the signal log of a tracking table."""
    sc = load_scenario(scenario)
    if seed is not None:
        sc = replace(sc, rng_seed=seed)
    result = simulate(sc, read_table(table))
    out = _output_dir(out)
    write_log(result.series, out / "log.csv")
    result.truth.to_csv(out / "truth.csv", index=False, float_format="%.17g")
    click.echo(f"{len(result.series)} samples")


@cli.command("decompose")
@click.argument("transform", type=input_file)
def decompose_command(transform: Path):
    """Print translation, scaling, shear and rotation of a transform."""
    click.echo(decompose(read_transform(transform)).describe())


@cli.command("check-cycle")
@click.argument("log", type=input_file)
@click.argument("table", type=input_file)
@click.option("--sigma", type=float, default=5.0, show_default=True, help="Smoothing sigma in seconds.")
@out_option
def check_cycle_command(log: Path, table: Path, sigma: float, out: Path):
    """Compare levels at zero-offset points with the local maxima around them."""
    smoothed = smooth(read_log(log), SmoothingConfig(sigma_seconds=sigma))
    df, mae, worst = offset_cycle_errors(smoothed, read_table(table))
    text = (
        df.to_string(index=False, float_format="{:.6f}".format)
        + f"\nMAE [dBm]: {mae:.6f}\nmax [dBm]: {worst:.6f}\n"
    )
    (_output_dir(out) / "report.txt").write_text(text)
    click.echo(f"MAE [dBm]: {mae:.6f}\nmax [dBm]: {worst:.6f}")


if __name__ == "__main__":
    cli()
