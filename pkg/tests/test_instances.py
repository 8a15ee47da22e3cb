import numpy as np

from spectra_bounds.graph import distance_matrix
from spectra_bounds.instances import random_connected_graph, random_irreducible_matrix, random_scale_vector


def test_random_connected_graph_is_reproducible():
    first = random_connected_graph(np.random.default_rng(42))
    second = random_connected_graph(np.random.default_rng(42))
    assert first.n == second.n
    assert first.edges == second.edges


def test_random_connected_graphs_respect_bounds():
    rng = np.random.default_rng(0)
    for _ in range(25):
        g = random_connected_graph(rng, n_min=3, n_max=9)
        assert 3 <= g.n <= 9
        assert np.all(distance_matrix(g).dist >= 0)


def test_sparse_draws_still_connected():
    rng = np.random.default_rng(1)
    g = random_connected_graph(rng, n_min=12, n_max=12, p_min=0.01, p_max=0.02)
    assert g.n == 12
    assert len(g.edges) >= 11


def test_random_irreducible_matrix():
    rng = np.random.default_rng(5)
    m = random_irreducible_matrix(rng, n_max=6, entry_max=3.0)
    off = m.entries[~np.eye(m.n, dtype=bool)]
    assert 2 <= m.n <= 6
    assert np.all(off >= 1e-3)
    assert np.all(m.entries <= 3.0)


def test_random_scale_vector():
    c = random_scale_vector(np.random.default_rng(3), 7)
    assert c.n == 7
    assert np.all((c.c >= 0.1) & (c.c <= 10.0))
