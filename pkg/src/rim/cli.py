"""Command-line surface: pattern, contour, connectivity, sweep, serve.

Every command is deterministic (fixed flags and inputs give byte-identical
output files), exits 0 only when all outputs were fully written, and removes
partially written files on failure.  `rim pattern --seed S` generates the
same pattern node 0 would receive in a scenario with master seed S.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .errors import GenerationExhaustedError, RimError
from .irregularity import generate_pattern
from .output import (
    contour_csv,
    contour_ranges,
    contour_svg,
    edges_csv,
    pattern_csv,
    summary_line,
    sweep_csv,
)
from .propagation import PathLossParams, RadioParams, isotropic_range_m
from .rng import RngStream
from .scenario import asymmetry_report, build_connectivity, doi_sweep, pattern_stream_id
from .schema import load_scenario

_seed_option = click.option(
    "--seed",
    type=click.IntRange(0, 2**64 - 1),
    default=0,
    envvar="RIM_SEED",
    show_default=True,
    help="Master seed (falls back to $RIM_SEED).",
)
_doi_option = click.option(
    "--doi", type=click.FloatRange(min=0), default=0.006, show_default=True,
    help="Degree of irregularity.",
)
_weibull_options = [
    click.option("--a", "scale_a", type=click.FloatRange(min=0, min_open=True),
                 default=1.5, show_default=True, help="Weibull scale."),
    click.option("--b", "shape_b", type=click.FloatRange(min=0, min_open=True),
                 default=1.0, show_default=True, help="Weibull shape."),
]
_pathloss_options = [
    click.option("--freq-hz", type=click.FloatRange(min=0, min_open=True),
                 default=2.4e9, show_default=True, help="Carrier frequency in Hz."),
    click.option("--alpha", type=click.FloatRange(min=1), default=2.0,
                 show_default=True, help="Path-loss exponent."),
    click.option("--system-loss-db", type=click.FloatRange(min=0), default=0.0,
                 show_default=True, help="Fixed system loss in dB."),
]


def _add_options(options):
    def wrap(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return wrap


def _write_outputs(outputs: dict[Path, str]) -> None:
    """Write fully rendered contents; on any failure remove what was written."""
    written = []
    try:
        for path, content in outputs.items():
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                written.append(path)
                fh.write(content)
    except OSError:
        for path in written:
            path.unlink(missing_ok=True)
        raise


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Directional radio-range irregularity: patterns, contours, link asymmetry."""


@main.command("pattern")
@_seed_option
@_doi_option
@_add_options(_weibull_options)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Output CSV path (degree,k).")
def cmd_pattern(seed, doi, scale_a, shape_b, out):
    """Generate one node's 360-degree coefficient sequence as CSV."""
    stream = RngStream(seed, pattern_stream_id(0))
    try:
        pat = generate_pattern(stream, doi, scale_a=scale_a, shape_b=shape_b)
        _write_outputs({out: pattern_csv(pat)})
    except GenerationExhaustedError as exc:
        _fail(f"{exc} (attempts: {exc.attempts})")
    except (RimError, OSError) as exc:
        _fail(str(exc))


@main.command("contour")
@_seed_option
@_doi_option
@_add_options(_weibull_options)
@_add_options(_pathloss_options)
@click.option("--tx-dbm", type=float, default=0.0, show_default=True,
              help="Transmit power in dBm.")
@click.option("--sens-dbm", type=float, default=-80.0, show_default=True,
              help="Peer receiver sensitivity in dBm.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Output CSV path (degree,k,range_m).")
@click.option("--svg", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Optional SVG polar plot of the contour.")
def cmd_contour(seed, doi, scale_a, shape_b, freq_hz, alpha, system_loss_db,
                tx_dbm, sens_dbm, out, svg):
    """Render the directional range contour for one transmitter."""
    stream = RngStream(seed, pattern_stream_id(0))
    try:
        params = PathLossParams(frequency_hz=freq_hz, alpha=alpha, system_loss_db=system_loss_db)
        radio = RadioParams(tx_power_dbm=tx_dbm, rx_sensitivity_dbm=sens_dbm)
        pat = generate_pattern(stream, doi, scale_a=scale_a, shape_b=shape_b)
        outputs = {out: contour_csv(pat, radio, sens_dbm, params)}
        if svg is not None:
            ranges = contour_ranges(pat, radio, sens_dbm, params)
            outputs[svg] = contour_svg(ranges, isotropic_range_m(radio, sens_dbm, params))
        _write_outputs(outputs)
    except GenerationExhaustedError as exc:
        _fail(f"{exc} (attempts: {exc.attempts})")
    except (RimError, OSError) as exc:
        _fail(str(exc))


@main.command("connectivity")
@click.argument("scenario_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Output edge-list CSV path (src,dst,prx_dbm,audible).")
def cmd_connectivity(scenario_path, out):
    """Evaluate every directed link of a scenario and print a summary."""
    try:
        scn = load_scenario(scenario_path)
        graph = build_connectivity(scn)
        report = asymmetry_report(graph, scn)
        _write_outputs({out: edges_csv(graph)})
    except GenerationExhaustedError as exc:
        _fail(f"{exc} (attempts: {exc.attempts})")
    except (RimError, OSError) as exc:
        _fail(str(exc))
    click.echo(summary_line(report))


@main.command("sweep")
@click.argument("scenario_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--doi-list", required=True,
              help="Comma-separated DOI values, e.g. '0,0.002,0.006'.")
@click.option("--reps", type=click.IntRange(min=1), default=30, show_default=True,
              help="Replications per DOI value.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True,
              help="Output CSV path (doi,mean_asym,std,reps).")
def cmd_sweep(scenario_path, doi_list, reps, out):
    """Sweep DOI values, measuring mean link asymmetry over replications."""
    try:
        values = [float(part) for part in doi_list.split(",") if part.strip() != ""]
    except ValueError:
        raise click.BadParameter(f"--doi-list must be comma-separated numbers, got {doi_list!r}")
    if not values:
        raise click.BadParameter("--doi-list must contain at least one value")
    if any(v < 0 for v in values):
        raise click.BadParameter("--doi-list values must be non-negative")
    try:
        scn = load_scenario(scenario_path)
        rows = doi_sweep(scn, values, reps)
        _write_outputs({out: sweep_csv(rows)})
    except GenerationExhaustedError as exc:
        _fail(f"{exc} (attempts: {exc.attempts})")
    except (RimError, OSError) as exc:
        _fail(str(exc))


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host, port):
    """Run the HTTP service exposing the same operations."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
