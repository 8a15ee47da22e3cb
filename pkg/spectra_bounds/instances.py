"""
Random Instances

Reproducible random inputs for verification runs:
- random connected graphs: G(n, p), p drawn from [p_min, p_max], rejection-sampled for connectivity
- random irreducible matrices: entries uniform in [0, entry_max], off-diagonal forced positive
- random positive scale vectors
"""
import logging

import networkx as nx
import numpy as np

from .bounds import ScaleVector
from .graph import Graph
from .matrix import IrreducibleMatrix, NonnegativeMatrix, validate_irreducible

logger = logging.getLogger("spectra.instances")

MAX_ATTEMPTS = 1000


def random_connected_graph(
    rng: np.random.Generator,
    n_min: int = 2,
    n_max: int = 8,
    p_min: float = 0.3,
    p_max: float = 0.9,
) -> Graph:
    """Erdos-Renyi graph conditioned on connectivity."""
    n = int(rng.integers(n_min, n_max + 1))
    p = float(rng.uniform(p_min, p_max))

    for _ in range(MAX_ATTEMPTS):
        g = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        if nx.is_connected(g):
            return Graph.from_edges(n, g.edges())

    # sparse draws on larger n: fall back to a random spanning tree plus G(n, p) edges
    logger.warning(f"No connected G({n}, {p:.2f}) after {MAX_ATTEMPTS} attempts, seeding with a tree")
    g = nx.random_labeled_tree(n, seed=int(rng.integers(2**31)))
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v) and rng.random() < p:
                g.add_edge(u, v)
    return Graph.from_edges(n, g.edges())


def random_irreducible_matrix(
    rng: np.random.Generator,
    n_min: int = 2,
    n_max: int = 12,
    entry_max: float = 10.0,
) -> IrreducibleMatrix:
    """Dense matrix with positive off-diagonal entries (hence irreducible); diagonal may be 0."""
    n = int(rng.integers(n_min, n_max + 1))
    entries = rng.uniform(0.0, entry_max, size=(n, n))
    off_diagonal = ~np.eye(n, dtype=bool)
    entries[off_diagonal] = np.maximum(entries[off_diagonal], 1e-3)
    return validate_irreducible(NonnegativeMatrix(entries))


def random_scale_vector(rng: np.random.Generator, n: int, low: float = 0.1, high: float = 10.0) -> ScaleVector:
    return ScaleVector(rng.uniform(low, high, size=n))
