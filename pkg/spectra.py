#!/usr/bin/env python3
"""
spectra - spectral radius bounds through scale vectors

Evaluates the upper/lower scale-vector bounds on a matrix or graph input and
compares each one with the power-iteration oracle.

Usage:
    python spectra.py bound  --input G.txt --matrix all --alpha 0,1 --index best
    python spectra.py bound  --input A.txt --kind matrix --format csv
    python spectra.py verify --kind graph --trials 100 --seed 0
    python spectra.py sweep  --input G.txt --matrix dist --alpha -1,0,1,2 --format csv
    python spectra.py help

Exit codes: 0 success, 1 input error, 2 numeric failure (or verify violation).
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple, Union

import click
from pydantic import ValidationError

from spectra_bounds.config import get_config
from spectra_bounds.errors import InputError, SpectraError
from spectra_bounds.graph_bounds import KIND_ALIASES, canonical_kind
from spectra_bounds.io import read_graph, read_matrix
from spectra_bounds.matrix import validate_irreducible
from spectra_bounds.models import MATRIX_KINDS, RunConfig
from spectra_bounds.output import render_rows, render_sweep, render_verify
from spectra_bounds.runner import evaluate_graph, evaluate_matrix, run_sweep, run_verify

logger = logging.getLogger("spectra.cli")

KIND_CHOICES = list(MATRIX_KINDS) + list(KIND_ALIASES) + ["all"]


# =============================================================================
# Option Parsing
# =============================================================================

def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s [%(levelname)s] %(message)s',
        stream=sys.stderr,
        force=True,
    )


def parse_alphas(raw: str) -> Tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of reals, got {raw!r}", param_hint="--alpha")


def parse_indices(raw: str) -> Union[str, Tuple[int, ...]]:
    if raw in ("all", "best"):
        return raw
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected all, best or a comma-separated list of ranks, got {raw!r}",
                                 param_hint="--index")


def parse_kinds(raw: str) -> Tuple[str, ...]:
    return MATRIX_KINDS if raw == "all" else (canonical_kind(raw),)


def parse_sides(raw: str) -> Tuple[str, ...]:
    return ("upper", "lower") if raw == "both" else (raw,)


def build_run_config(input_path: Optional[Path], kind: str, matrix: str, alpha: str, index: str,
                     side: str, output_format: str, tol: Optional[float]) -> RunConfig:
    """Merge command-line flags over settings.yaml."""
    config = get_config()
    return RunConfig(
        input_path=input_path,
        input_kind=kind,
        matrix_kinds=parse_kinds(matrix),
        alphas=parse_alphas(alpha),
        indices=parse_indices(index),
        sides=parse_sides(side),
        output_format=output_format,
        tol=tol if tol is not None else config["oracle"]["tol"],
        max_iter=config["oracle"]["max_iter"],
        attain_tol=config["bounds"]["attain_tol"],
        structural_tol=config["bounds"]["structural_tol"],
        radicand_tol=config["bounds"]["radicand_tol"],
        threads=config["runtime"]["threads"],
    )


def _default_alphas() -> str:
    return ",".join(str(a) for a in get_config()["verify"]["alphas"])


def _apply(func, options):
    for option in reversed(options):
        func = option(func)
    return func


def common_options(func):
    """Flags shared by bound / verify / sweep."""
    return _apply(func, [
        click.option("--kind", type=click.Choice(["matrix", "graph"]), default="graph", show_default=True,
                     help="Input kind"),
        click.option("--matrix", "matrix", type=click.Choice(KIND_CHOICES), default="all", show_default=True,
                     help="Graph matrix"),
        click.option("--format", "output_format", type=click.Choice(["table", "csv", "json"]), default="table",
                     show_default=True),
        click.option("--tol", type=float, default=None, help="Oracle tolerance (default: settings.yaml)"),
        click.option("--verbose", "-v", is_flag=True, help="Debug logging"),
    ])


def rank_options(func):
    """Rank and side selection for bound and verify."""
    return _apply(func, [
        click.option("--index", default="all", show_default=True, help="all, best or LIST of ranks"),
        click.option("--side", type=click.Choice(["upper", "lower", "both"]), default="both", show_default=True),
    ])


def _emit(text: str):
    click.echo(text, nl=False)


# =============================================================================
# Commands
# =============================================================================

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Spectral radius bounds for nonnegative matrices and graphs."""


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Matrix file or edge list")
@click.option("--alpha", default="0", show_default=True, help="Comma-separated exponents")
@common_options
@rank_options
def bound(input_path, kind, matrix, alpha, index, side, output_format, tol, verbose):
    """Evaluate bounds on one input and compare with the oracle."""
    setup_logging(verbose)
    config = build_run_config(input_path, kind, matrix, alpha, index, side, output_format, tol)
    output = get_config()["output"]

    if config.input_kind == "matrix":
        m = validate_irreducible(read_matrix(input_path))
        logger.info(f"Loaded {m.n}x{m.n} matrix from {input_path}")
        reports = evaluate_matrix(m, config)
    else:
        g = read_graph(input_path)
        logger.info(f"Loaded graph n={g.n} m={len(g.edges)} from {input_path}")
        reports = evaluate_graph(g, config)

    _emit(render_rows(reports, config.output_format, output["machine_digits"], output["table_digits"]))
    return 0


@cli.command()
@click.option("--alpha", default=None, help="Comma-separated exponents (default: settings.yaml)")
@click.option("--trials", type=int, default=None, help="Random instances (default: settings.yaml)")
@click.option("--seed", type=int, default=None, help="Run seed; trial k uses seed + k")
@common_options
@rank_options
def verify(alpha, trials, seed, kind, matrix, index, side, output_format, tol, verbose):
    """Check lower <= rho <= upper on random instances."""
    setup_logging(verbose)
    settings = get_config()["verify"]
    trials = settings["trials"] if trials is None else trials
    seed = settings["seed"] if seed is None else seed
    if trials < 1:
        raise InputError(f"--trials must be >= 1, got {trials}")

    config = build_run_config(None, kind, matrix, alpha or _default_alphas(), index, side, output_format, tol)
    report = run_verify(config, trials, seed, settings)
    _emit(render_verify(report, config.output_format, get_config()["output"]["machine_digits"]))
    return 0 if report.passed else 2


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Edge list")
@click.option("--alpha", default=None, help="Comma-separated exponents (default: settings.yaml)")
@common_options
def sweep(input_path, alpha, kind, matrix, output_format, tol, verbose):
    """Best upper gap and lower gap per matrix kind and alpha."""
    setup_logging(verbose)
    if kind != "graph":
        raise InputError("sweep needs a graph input (--kind graph)")
    config = build_run_config(input_path, kind, matrix, alpha or _default_alphas(), "best", "both",
                              output_format, tol)
    g = read_graph(input_path)
    output = get_config()["output"]
    _emit(render_sweep(run_sweep(g, config), config.output_format, output["machine_digits"],
                       output["table_digits"]))
    return 0


@cli.command("help")
@click.pass_context
def help_command(ctx):
    """Show usage."""
    click.echo(ctx.parent.get_help())
    return 0


# =============================================================================
# Main Entry Point
# =============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and map failures to exit codes (1 input, 2 numeric)."""
    try:
        rv = cli.main(args=argv, prog_name="spectra", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e.errors()[0]['msg']}")
        return 1
    except SpectraError as e:
        logger.error(str(e))
        return e.exit_code
    return rv or 0


if __name__ == "__main__":
    sys.exit(main())
