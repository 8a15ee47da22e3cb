import math

import pytest

from conftest import EXAMPLE_ROWS, matrix_of
from spectra_bounds.config import get_config
from spectra_bounds.models import RunConfig
from spectra_bounds.runner import evaluate_graph, evaluate_matrix, parallel_map, run_sweep, run_verify


def test_parallel_map_keeps_order():
    assert parallel_map(lambda x: x * x, list(range(20)), threads=4) == [x * x for x in range(20)]
    assert parallel_map(lambda x: -x, [3, 1], threads=1) == [-3, -1]


def test_graph_row_order(path3):
    config = RunConfig(matrix_kinds=("dist", "adj"), alphas=(1.0, 0.0, 1.0), threads=3)
    reports = evaluate_graph(path3, config)
    keys = [(r.kind, r.alpha, r.index_i, r.side) for r in reports]
    expected = [
        (kind, alpha, i, side)
        for kind in ("dist", "adj")
        for alpha in (0.0, 1.0)
        for i, side in ((1, "upper"), (2, "upper"), (3, "upper"), (3, "lower"))
    ]
    assert keys == expected


def test_graph_explicit_indices_and_side(bowtie_graph):
    config = RunConfig(matrix_kinds=("q",), alphas=(1.0,), indices=(2,), sides=("upper",))
    (report,) = evaluate_graph(bowtie_graph, config)
    assert report.value == pytest.approx((7 + math.sqrt(17)) / 2)
    assert report.equality.holds


def test_graph_best_index(path3):
    config = RunConfig(matrix_kinds=("adj",), indices="best", sides=("upper",))
    (report,) = evaluate_graph(path3, config)
    assert report.index_i == 2


def test_matrix_rows():
    config = RunConfig(input_kind="matrix")
    reports = evaluate_matrix(matrix_of(EXAMPLE_ROWS), config)
    assert [(r.index_i, r.side) for r in reports] == [
        (1, "upper"), (2, "upper"), (3, "upper"), (4, "upper"), (5, "upper"), (5, "lower"),
    ]
    assert all(r.alpha is None and r.kind is None for r in reports)


def test_sweep_path_distance(path3):
    config = RunConfig(matrix_kinds=("dist",), alphas=(1.0, 0.0))
    rows = run_sweep(path3, config)
    assert [(r.kind, r.alpha) for r in rows] == [("dist", 0.0), ("dist", 1.0)]
    rho = 1 + math.sqrt(3)
    assert rows[0].best_i == 3
    assert rows[0].upper_gap == pytest.approx(2 * math.sqrt(2) - rho)
    assert rows[0].lower_gap == pytest.approx((1 + math.sqrt(17)) / 2 - rho)


def test_sweep_complete_graph_has_no_gap(complete):
    rows = run_sweep(complete(5), RunConfig(alphas=(-1.0, 0.0, 2.0)))
    assert len(rows) == 12
    for row in rows:
        assert row.upper_gap == pytest.approx(0.0, abs=1e-9)
        assert row.lower_gap == pytest.approx(0.0, abs=1e-9)


def test_sweep_bowtie_signless(bowtie_graph):
    rows = run_sweep(bowtie_graph, RunConfig(matrix_kinds=("q",), alphas=(0.0, 1.0)))
    assert rows[1].best_i == 2
    assert rows[1].upper_gap == pytest.approx(0.0, abs=1e-6)
    # the degree form (alpha = 0) is attained at the same rank
    assert rows[0].upper_gap == pytest.approx(0.0, abs=1e-6)


@pytest.mark.parametrize("input_kind", ["graph", "matrix"])
def test_verify_is_deterministic_and_passes(input_kind):
    settings = get_config()["verify"]
    config = RunConfig(input_kind=input_kind, alphas=(-1.0, 0.0, 1.0, 2.0), threads=2)
    first = run_verify(config, trials=5, seed=7, settings=settings)
    second = run_verify(config, trials=5, seed=7, settings=settings)
    assert first.model_dump() == second.model_dump()
    assert first.passed
    assert first.checked > 0
    assert (first.trials, first.seed, first.input_kind) == (5, 7, input_kind)


@pytest.mark.parametrize("indices, sides, per_pair", [
    ((1,), ("upper",), 1),
    ("best", ("upper",), 1),
    ((1, 2), ("upper", "lower"), 3),
])
def test_verify_graph_honours_index_and_side(indices, sides, per_pair):
    config = RunConfig(matrix_kinds=("adj", "dist"), alphas=(0.0, 1.0), indices=indices, sides=sides)
    report = run_verify(config, trials=3, seed=0, settings=get_config()["verify"])
    assert report.checked == 3 * 2 * 2 * per_pair
    assert report.passed


def test_verify_matrix_honours_index():
    settings = get_config()["verify"]
    config = RunConfig(input_kind="matrix", indices=(2,), sides=("upper",))
    # all-ones and one random scale vector per instance
    assert run_verify(config, trials=4, seed=3, settings=settings).checked == 4 * 2


def test_verify_skips_ranks_beyond_instance_size():
    settings = get_config()["verify"]
    config = RunConfig(input_kind="matrix", indices=(settings["matrix_n_max"] + 1,), sides=("upper",))
    report = run_verify(config, trials=2, seed=0, settings=settings)
    assert report.checked == 0
    assert report.passed
