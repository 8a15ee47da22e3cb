"""
Shared fixtures, hypothesis strategies and independent oracles.

The oracles here do not go through spectra_bounds: the characteristic
polynomial root scan and the classic alpha = 0 bound formulas are coded
directly from degrees and networkx distances.
"""
import math
from typing import List

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from spectra_bounds.bounds import ScaleVector
from spectra_bounds.graph import Graph
from spectra_bounds.matrix import IrreducibleMatrix, NonnegativeMatrix, validate_irreducible

EXAMPLE_ROWS = [
    [0, 4, 2, 3, 3],
    [4, 0, 2, 2, 3],
    [4, 4, 0, 1, 1],
    [4, 4, 1, 0, 1],
    [4, 4, 1, 1, 0],
]

# degrees (4,2,2,2,2), average degrees (2,3,3,3,3)
BOWTIE_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]

ALPHAS = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0]


def graph_from_nx(g: nx.Graph) -> Graph:
    g = nx.convert_node_labels_to_integers(g)
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def matrix_of(rows) -> IrreducibleMatrix:
    return validate_irreducible(NonnegativeMatrix.from_rows(rows))


# =============================================================================
# Fixtures
# =============================================================================

@pytest.fixture
def example_matrix() -> IrreducibleMatrix:
    return matrix_of(EXAMPLE_ROWS)


@pytest.fixture
def bowtie_graph() -> Graph:
    return Graph.from_edges(5, BOWTIE_EDGES)


@pytest.fixture
def path3() -> Graph:
    return graph_from_nx(nx.path_graph(3))


@pytest.fixture
def star4() -> Graph:
    return graph_from_nx(nx.star_graph(3))


@pytest.fixture
def cycle4() -> Graph:
    return graph_from_nx(nx.cycle_graph(4))


@pytest.fixture
def cycle5() -> Graph:
    return graph_from_nx(nx.cycle_graph(5))


@pytest.fixture
def complete():
    return lambda n: graph_from_nx(nx.complete_graph(n))


# =============================================================================
# Strategies
# =============================================================================

@st.composite
def connected_graphs(draw, n_min: int = 2, n_max: int = 10) -> Graph:
    """Random spanning tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(n_min, n_max))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        keep = draw(st.lists(st.booleans(), min_size=len(others), max_size=len(others)))
        edges |= {pair for pair, kept in zip(others, keep) if kept}
    return Graph.from_edges(n, sorted(edges))


@st.composite
def irreducible_matrices(draw, n_min: int = 2, n_max: int = 8, dense: bool = False) -> IrreducibleMatrix:
    """
    Random support containing the cycle 0 -> 1 -> ... -> n-1 -> 0, entries in [0.1, 10].
    dense=True keeps every entry positive.
    """
    n = draw(st.integers(n_min, n_max))
    values = draw(st.lists(st.floats(0.1, 10.0), min_size=n * n, max_size=n * n))
    if dense:
        support = [True] * (n * n)
    else:
        support = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    a = np.array(values).reshape(n, n) * np.array(support).reshape(n, n)
    for k in range(n):
        a[k, (k + 1) % n] = max(a[k, (k + 1) % n], values[k])
    return validate_irreducible(NonnegativeMatrix(a))


@st.composite
def scale_vectors(draw, n: int) -> ScaleVector:
    return ScaleVector(draw(st.lists(st.floats(0.1, 10.0), min_size=n, max_size=n)))


# =============================================================================
# Independent Oracles
# =============================================================================

def char_poly_rho(a: np.ndarray, steps: int = 1000, bisections: int = 200) -> float:
    """
    Largest real root of det(xI - A), bracketed between min and max row sum.

    Scans down from above the max row sum until det changes sign, then bisects.
    """
    a = np.asarray(a, dtype=float)
    eye = np.eye(a.shape[0])

    def f(x: float) -> float:
        return float(np.linalg.det(x * eye - a))

    row_sums = a.sum(axis=1)
    hi, lo = float(row_sums.max()) + 1.0, float(row_sums.min()) - 1.0
    h = (hi - lo) / steps
    x = hi
    while x > lo:
        y = x - h
        if f(y) <= 0:
            left, right = y, x
            for _ in range(bisections):
                mid = (left + right) / 2
                if f(mid) > 0:
                    right = mid
                else:
                    left = mid
            return (left + right) / 2
        x = y
    raise AssertionError("no sign change found")


def transmissions_nx(g: Graph) -> List[int]:
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n))
    return [int(sum(nx.single_source_shortest_path_length(h, v).values())) for v in range(g.n)]


def diameter_nx(g: Graph) -> int:
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n))
    return nx.diameter(h)


def degrees_desc(g: Graph) -> List[int]:
    return sorted((int(d) for d in g.degrees), reverse=True)


def _deviation(values: List[float], i: int) -> float:
    return sum(values[k] - values[i - 1] for k in range(i - 1))


def adjacency_degree_bound(g: Graph, i: int) -> float:
    d = degrees_desc(g)
    di = d[i - 1]
    return (di - 1 + math.sqrt((di + 1) ** 2 + 4 * _deviation(d, i))) / 2


def signless_degree_bound(g: Graph, i: int) -> float:
    d = degrees_desc(g)
    di = d[i - 1]
    return (d[0] + 2 * di - 1 + math.sqrt((2 * di - d[0] + 1) ** 2 + 8 * _deviation(d, i))) / 2


def distance_transmission_bound(g: Graph, i: int) -> float:
    t = sorted(transmissions_nx(g), reverse=True)
    d = diameter_nx(g)
    ti = t[i - 1]
    return (ti - d + math.sqrt((ti + d) ** 2 + 4 * d * _deviation(t, i))) / 2


def dsl_transmission_bound(g: Graph, i: int) -> float:
    t = sorted(transmissions_nx(g), reverse=True)
    d = diameter_nx(g)
    ti = t[i - 1]
    return (t[0] + 2 * ti - d + math.sqrt((2 * ti - t[0] + d) ** 2 + 8 * d * _deviation(t, i))) / 2


def distance_transmission_lower(g: Graph) -> float:
    t = sorted(transmissions_nx(g), reverse=True)
    tn = t[-1]
    return (tn - 1 + math.sqrt((tn + 1) ** 2 + 4 * _deviation(t, len(t)))) / 2


def dsl_transmission_lower(g: Graph) -> float:
    t = sorted(transmissions_nx(g), reverse=True)
    tn = t[-1]
    return (3 * tn - 1 + math.sqrt((tn + 1) ** 2 + 8 * _deviation(t, len(t)))) / 2
