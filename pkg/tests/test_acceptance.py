"""
End-to-end regressions: worked examples, the classic alpha = 0 formulas,
randomized sandwich checks, Perron collapse, similarity, oracle accuracy on
every small connected graph and complete-graph exactness.
"""
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    ALPHAS,
    adjacency_degree_bound,
    char_poly_rho,
    connected_graphs,
    distance_transmission_bound,
    distance_transmission_lower,
    dsl_transmission_bound,
    dsl_transmission_lower,
    graph_from_nx,
    irreducible_matrices,
    scale_vectors,
    signless_degree_bound,
)
from spectra_bounds.bounds import (
    ScaleVector,
    all_upper_bounds,
    lower_bound,
    lower_bound_rowsum,
    scale_similar,
    upper_bound,
    upper_bound_rowsum,
)
from spectra_bounds.graph_bounds import (
    adjacency_upper,
    distance_lower,
    distance_upper,
    dsl_lower,
    dsl_upper,
    graph_all_upper,
    graph_lower,
    graph_matrix,
    graph_rho,
    signless_upper,
    signless_upper_avg,
)
from spectra_bounds.matrix import spectral_radius
from spectra_bounds.models import MATRIX_KINDS


def within(report, slack: float = 1e-6) -> bool:
    margin = slack * (1 + report.rho)
    if report.side == "upper":
        return report.value >= report.rho - margin
    return report.value <= report.rho + margin


def test_example_matrix_regression(example_matrix):
    report = upper_bound_rowsum(example_matrix, 3)
    assert report.value == pytest.approx((6 + math.sqrt(244)) / 2, abs=1e-12)
    assert report.rho == pytest.approx(10.8102, abs=1e-3)
    assert report.equality.holds
    assert report.equality.witness_t == 3


def test_bowtie_graph_regression(bowtie_graph):
    report = signless_upper_avg(bowtie_graph, 2)
    assert report.value == pytest.approx((7 + math.sqrt(17)) / 2, abs=1e-12)
    assert report.rho == pytest.approx(5.5616, abs=1e-3)
    assert report.equality.holds


@settings(max_examples=50, deadline=None)
@given(g=connected_graphs(n_max=10))
def test_alpha_zero_matches_classic_formulas(g):
    exact = dict(rel=1e-12, abs=1e-12)
    for i in range(1, g.n + 1):
        assert adjacency_upper(g, 0.0, i, rho=1.0).value == pytest.approx(adjacency_degree_bound(g, i), **exact)
        assert signless_upper(g, 0.0, i, rho=1.0).value == pytest.approx(signless_degree_bound(g, i), **exact)
        assert distance_upper(g, 0.0, i, rho=1.0).value == pytest.approx(distance_transmission_bound(g, i), **exact)
        assert dsl_upper(g, 0.0, i, rho=1.0).value == pytest.approx(dsl_transmission_bound(g, i), **exact)
    assert distance_lower(g, 0.0, rho=1.0).value == pytest.approx(distance_transmission_lower(g), **exact)
    assert dsl_lower(g, 0.0, rho=1.0).value == pytest.approx(dsl_transmission_lower(g), **exact)


@settings(max_examples=200, deadline=None)
@given(g=connected_graphs(n_max=10), alphas=st.lists(st.sampled_from(ALPHAS), min_size=1, max_size=3, unique=True))
def test_sandwich_on_random_graphs(g, alphas):
    for kind in MATRIX_KINDS:
        rho = graph_rho(g, kind)
        for alpha in alphas:
            for report in graph_all_upper(g, kind, alpha, rho) + [graph_lower(g, kind, alpha, rho)]:
                assert within(report), (kind, alpha, report.index_i, report.side, report.value, rho)


@settings(max_examples=300, deadline=None)
@given(data=st.data(), m=irreducible_matrices(n_max=12))
def test_sandwich_on_random_matrices(data, m):
    c = data.draw(scale_vectors(m.n))
    rho = spectral_radius(m).rho
    for scale in (ScaleVector.ones(m.n), c):
        for report in all_upper_bounds(m, scale, rho) + [lower_bound(m, scale, rho)]:
            assert within(report)


@settings(max_examples=50, deadline=None)
@given(m=irreducible_matrices(dense=True))
def test_perron_collapse(m):
    estimate = spectral_radius(m)
    c = ScaleVector(estimate.vector())
    slack = 1e-6 * (1 + estimate.rho)
    assert abs(upper_bound(m, c, 1, estimate.rho).value - estimate.rho) <= slack
    assert abs(lower_bound(m, c, estimate.rho).value - estimate.rho) <= slack


@settings(max_examples=50, deadline=None)
@given(data=st.data(), m=irreducible_matrices())
def test_similarity_equivalence(data, m):
    c = data.draw(scale_vectors(m.n))
    b = scale_similar(m, c)
    for i in range(1, m.n + 1):
        assert upper_bound(m, c, i, 1.0).value == pytest.approx(upper_bound_rowsum(b, i, 1.0).value, abs=1e-9)
    assert lower_bound(m, c, 1.0).value == pytest.approx(lower_bound_rowsum(b, 1.0).value, abs=1e-9)


SMALL_CONNECTED = [
    g for g in nx.graph_atlas_g()
    if 2 <= g.number_of_nodes() <= 5 and nx.is_connected(g)
]


@pytest.mark.parametrize("atlas_graph", SMALL_CONNECTED, ids=lambda g: f"n{g.number_of_nodes()}m{g.number_of_edges()}")
def test_oracle_on_small_connected_graphs(atlas_graph):
    g = graph_from_nx(atlas_graph)
    for kind in MATRIX_KINDS:
        m = graph_matrix(g, kind)
        assert spectral_radius(m).rho == pytest.approx(char_poly_rho(m.entries), abs=1e-8), kind


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph_exactness(complete, n):
    g = complete(n)
    expected = {"adj": n - 1, "q": 2 * n - 2, "dist": n - 1, "dq": 2 * n - 2}
    for kind in MATRIX_KINDS:
        for alpha in (-1.0, 0.0, 1.0, 2.0):
            reports = graph_all_upper(g, kind, alpha) + [graph_lower(g, kind, alpha)]
            for report in reports:
                assert report.value == pytest.approx(expected[kind], abs=1e-9)
                assert report.rho == pytest.approx(expected[kind], abs=1e-9)
