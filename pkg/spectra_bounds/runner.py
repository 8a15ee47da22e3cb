"""
Runner

Drives the bound families over an input and compares each value with the
oracle:

- evaluate_matrix / evaluate_graph: rows for the `bound` command
- run_verify: randomized sandwich checks (`verify`)
- run_sweep: best upper gap and lower gap per (kind, alpha) (`sweep`)

Independent (kind, alpha) pairs and verify trials run on a thread pool;
results are collected in submission order so output is deterministic.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar, Union

import numpy as np

from .bounds import (
    Tolerances,
    ScaleVector,
    all_upper_bounds,
    best_upper_bound,
    lower_bound,
    lower_bound_rowsum,
    upper_bound,
)
from .graph import Graph
from .graph_bounds import (
    graph_all_upper,
    graph_best_upper,
    graph_lower,
    graph_rho,
    graph_upper,
)
from .instances import random_connected_graph, random_irreducible_matrix, random_scale_vector
from .matrix import IrreducibleMatrix, spectral_radius
from .models import BoundReport, RunConfig, SweepRow, VerifyReport, Violation

logger = logging.getLogger("spectra.runner")

T = TypeVar("T")
R = TypeVar("R")


def tolerances(config: RunConfig) -> Tolerances:
    return Tolerances(
        attain=config.attain_tol,
        structural=config.structural_tol,
        radicand=config.radicand_tol,
        oracle=config.tol,
        max_iter=config.max_iter,
    )


def parallel_map(func: Callable[[T], R], items: Sequence[T], threads: int) -> List[R]:
    """Ordered map over a thread pool (plain loop when threads == 1)."""
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def _row_order(reports: Iterable[BoundReport]) -> List[BoundReport]:
    """i ascending, upper before lower."""
    return sorted(reports, key=lambda r: (r.index_i, r.side != "upper"))


# =============================================================================
# bound
# =============================================================================

def _requested_indices(config: RunConfig, n: Optional[int] = None) -> Union[str, List[int]]:
    """
    "all", "best" or the sorted explicit ranks. With n given, ranks above n are
    dropped (random verify instances vary in size).
    """
    if isinstance(config.indices, str):
        return config.indices
    return [i for i in sorted(set(config.indices)) if n is None or i <= n]


def _matrix_uppers(m: IrreducibleMatrix, c: ScaleVector, indices: Union[str, List[int]], rho: float,
                   tol: Tolerances) -> List[BoundReport]:
    if indices == "all":
        return all_upper_bounds(m, c, rho, tol)
    if indices == "best":
        return [best_upper_bound(m, c, rho, tol)]
    return [upper_bound(m, c, i, rho, tol) for i in indices]


def evaluate_matrix(m: IrreducibleMatrix, config: RunConfig) -> List[BoundReport]:
    """Row-sum bounds (c = all-ones) for a matrix input."""
    tol = tolerances(config)
    rho = spectral_radius(m, tol.oracle, tol.max_iter).rho
    reports = []
    if "upper" in config.sides:
        indices = _requested_indices(config)
        reports += _matrix_uppers(m, ScaleVector.ones(m.n), indices, rho, tol)
    if "lower" in config.sides:
        reports.append(lower_bound_rowsum(m, rho, tol))
    return _row_order(reports)


def _graph_uppers(g: Graph, kind: str, alpha: float, indices: Union[str, List[int]], rho: float,
                  tol: Tolerances) -> List[BoundReport]:
    if indices == "all":
        return graph_all_upper(g, kind, alpha, rho, tol)
    if indices == "best":
        return [graph_best_upper(g, kind, alpha, rho, tol)]
    return [graph_upper(g, kind, alpha, i, rho, tol) for i in indices]


def evaluate_graph(g: Graph, config: RunConfig) -> List[BoundReport]:
    """Rows ordered by kind, then alpha ascending, then i ascending, upper before lower."""
    tol = tolerances(config)
    rhos = {kind: graph_rho(g, kind, tol) for kind in config.matrix_kinds}
    tasks = [(kind, alpha) for kind in config.matrix_kinds for alpha in sorted(set(config.alphas))]
    logger.info(f"Evaluating {len(tasks)} (kind, alpha) pairs on n={g.n} with {config.threads} thread(s)")
    indices = _requested_indices(config)

    def evaluate(task) -> List[BoundReport]:
        kind, alpha = task
        reports = []
        if "upper" in config.sides:
            reports += _graph_uppers(g, kind, alpha, indices, rhos[kind], tol)
        if "lower" in config.sides:
            reports.append(graph_lower(g, kind, alpha, rhos[kind], tol))
        return _row_order(reports)

    return [report for chunk in parallel_map(evaluate, tasks, config.threads) for report in chunk]


# =============================================================================
# verify
# =============================================================================

def _violates(report: BoundReport, tol: Tolerances) -> bool:
    slack = tol.attain * (1 + report.rho)
    if report.side == "upper":
        return report.value < report.rho - slack
    return report.value > report.rho + slack


def _violations(reports: List[BoundReport], trial_seed: int, instance: str, tol: Tolerances) -> List[Violation]:
    found = []
    for report in reports:
        if _violates(report, tol):
            logger.warning(
                f"Sandwich violation seed={trial_seed} kind={report.kind} alpha={report.alpha} "
                f"i={report.index_i} side={report.side} bound={report.value:.12g} rho={report.rho:.12g}"
            )
            found.append(Violation(
                seed=trial_seed,
                instance=instance,
                kind=report.kind or "matrix",
                alpha=report.alpha,
                i=report.index_i,
                side=report.side,
                bound=report.value,
                rho=report.rho,
            ))
    return found


def _describe_graph(g: Graph) -> str:
    edges = " ".join(f"{u + 1}-{v + 1}" for u, v in g.edges)
    return f"graph n={g.n} edges={edges}"


def _graph_trial(trial_seed: int, config: RunConfig, settings: dict, tol: Tolerances):
    rng = np.random.default_rng(trial_seed)
    g = random_connected_graph(
        rng,
        n_min=max(2, settings["graph_n_min"]),
        n_max=settings["graph_n_max"],
        p_min=settings["p_min"],
        p_max=settings["p_max"],
    )
    indices = _requested_indices(config, g.n)
    reports = []
    for kind in config.matrix_kinds:
        rho = graph_rho(g, kind, tol)
        for alpha in sorted(set(config.alphas)):
            if "upper" in config.sides:
                reports += _graph_uppers(g, kind, alpha, indices, rho, tol)
            if "lower" in config.sides:
                reports.append(graph_lower(g, kind, alpha, rho, tol))
    return len(reports), _violations(reports, trial_seed, _describe_graph(g), tol)


def _matrix_trial(trial_seed: int, config: RunConfig, settings: dict, tol: Tolerances):
    rng = np.random.default_rng(trial_seed)
    m = random_irreducible_matrix(rng, n_max=settings["matrix_n_max"], entry_max=settings["entry_max"])
    c = random_scale_vector(rng, m.n)
    indices = _requested_indices(config, m.n)
    rho = spectral_radius(m, tol.oracle, tol.max_iter).rho

    reports = []
    for scale in (ScaleVector.ones(m.n), c):
        if "upper" in config.sides:
            reports += _matrix_uppers(m, scale, indices, rho, tol)
        if "lower" in config.sides:
            reports.append(lower_bound(m, scale, rho, tol))
    return len(reports), _violations(reports, trial_seed, f"matrix n={m.n}", tol)


def run_verify(config: RunConfig, trials: int, seed: int, settings: dict) -> VerifyReport:
    """
    Check every requested bound on `trials` random instances. Trial k uses
    seed + k, so a violation reproduces with --trials 1 --seed <reported seed>.
    """
    tol = tolerances(config)
    trial = _graph_trial if config.input_kind == "graph" else _matrix_trial
    logger.info(f"Verifying {trials} random {config.input_kind} instance(s) from seed {seed}")

    outcomes = parallel_map(lambda s: trial(s, config, settings, tol), list(range(seed, seed + trials)),
                            config.threads)
    violations = [v for _, found in outcomes for v in found]
    checked = sum(count for count, _ in outcomes)
    logger.info(f"Checked {checked} bounds, {len(violations)} violation(s)")
    return VerifyReport(
        trials=trials,
        seed=seed,
        input_kind=config.input_kind,
        checked=checked,
        violations=violations,
    )


# =============================================================================
# sweep
# =============================================================================

def run_sweep(g: Graph, config: RunConfig) -> List[SweepRow]:
    """For each kind and alpha: min-over-i upper gap and the lower gap."""
    tol = tolerances(config)
    rhos = {kind: graph_rho(g, kind, tol) for kind in config.matrix_kinds}
    tasks = [(kind, alpha) for kind in config.matrix_kinds for alpha in sorted(set(config.alphas))]

    def sweep(task) -> SweepRow:
        kind, alpha = task
        rho = rhos[kind]
        best = graph_best_upper(g, kind, alpha, rho, tol)
        lower = graph_lower(g, kind, alpha, rho, tol)
        return SweepRow(
            kind=kind,
            alpha=alpha,
            best_i=best.index_i,
            upper_gap=best.gap,
            lower_gap=lower.gap,
            rho=rho,
        )

    return parallel_map(sweep, tasks, config.threads)
