"""
Graph Core

Simple connected undirected graphs and the four matrices built from them:
adjacency A, signless Laplacian Q = D + A, distance matrix, and distance
signless Laplacian (transmission diagonal + distance matrix).

Vertices are 0-based internally and 1-based in files and messages.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from .errors import DisconnectedGraph, DuplicateEdge, InputError, LoopEdge, ParseError, VertexOutOfRange
from .matrix import NonnegativeMatrix

logger = logging.getLogger("spectra.graph")


# =============================================================================
# Graph
# =============================================================================

@dataclass(frozen=True, eq=False)
class Graph:
    """Simple connected undirected graph on vertices 0..n-1."""

    n: int
    edges: Tuple[Tuple[int, int], ...]
    adjacency: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from 0-based edges; rejects loops and duplicates, then checks connectivity."""
        if n < 1:
            raise InputError(f"Graph needs at least one vertex, got n={n}")
        adjacency = np.zeros((n, n), dtype=int)
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(u, v, n)
            if u == v:
                raise LoopEdge(u)
            if adjacency[u, v]:
                raise DuplicateEdge(min(u, v), max(u, v))
            adjacency[u, v] = adjacency[v, u] = 1
            normalized.append((min(u, v), max(u, v)))

        adjacency.setflags(write=False)
        graph = cls(n=n, edges=tuple(sorted(normalized)), adjacency=adjacency)

        unreachable = np.flatnonzero(bfs_distances(graph, 0) < 0)
        if unreachable.size:
            raise DisconnectedGraph(int(unreachable[0]))
        return graph

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])


def parse_edge_list(text: str) -> Graph:
    """
    Edge-list format: first line n, then one "u v" per line with 1 <= u < v <= n.
    Blank lines are skipped and '#' starts a comment.
    """
    n: Optional[int] = None
    edges = []
    seen = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()

        if n is None:
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise ParseError(lineno, f"expected vertex count, got {line!r}")
            n = int(fields[0])
            continue

        if len(fields) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex in {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"vertex outside 1..{n} in {line!r}")
        if u == v:
            raise LoopEdge(u - 1)
        if u > v:
            raise ParseError(lineno, f"edges are written 'u v' with u < v, got {line!r}")
        if (u, v) in seen:
            raise DuplicateEdge(u - 1, v - 1)
        seen.add((u, v))
        edges.append((u - 1, v - 1))

    if n is None:
        raise ParseError(1, "empty edge list (missing vertex count)")
    return Graph.from_edges(n, edges)


# =============================================================================
# Distances
# =============================================================================

def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop counts from source; -1 marks unreachable vertices."""
    dist = np.full(g.n, -1, dtype=int)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _power(base: np.ndarray, alpha: float) -> np.ndarray:
    """base**alpha with alpha = 0 giving exactly 1."""
    if alpha == 0:
        return np.ones(base.shape[0])
    return np.asarray(base, dtype=float) ** alpha


@dataclass(frozen=True, eq=False)
class DegreeData:
    """
    Degrees, maximum degree and, for one alpha, the generalized average
    degree (^a m)_i = sum_{j~i} d_j^a / d_i^a together with
    off_max = max over adjacent ordered pairs of d_j^a / d_i^a.
    """

    degrees: np.ndarray
    max_degree: int
    alpha: float
    alpha_avg: np.ndarray
    off_max: float


@dataclass(frozen=True, eq=False)
class TransmissionData:
    """
    Shortest-path distances, transmissions and diameter; when alpha is set,
    also the generalized average transmission
    (^a M)_i = sum_j d_ij T_j^a / T_i^a and the extremal off-diagonal values
    of d_ij T_j^a / T_i^a.
    """

    dist: np.ndarray
    transmissions: np.ndarray
    diameter: int
    alpha: Optional[float] = None
    alpha_avg_tr: Optional[np.ndarray] = None
    off_max: Optional[float] = None
    off_min: Optional[float] = None

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def at_alpha(self, alpha: float) -> "TransmissionData":
        powers = _power(self.transmissions, alpha)
        scaled = self.dist * powers[np.newaxis, :] / powers[:, np.newaxis]
        off = scaled[~np.eye(self.n, dtype=bool)]
        return TransmissionData(
            dist=self.dist,
            transmissions=self.transmissions,
            diameter=self.diameter,
            alpha=alpha,
            alpha_avg_tr=(self.dist @ powers) / powers,
            off_max=float(off.max()) if off.size else 0.0,
            off_min=float(off.min()) if off.size else 0.0,
        )


def distance_matrix(g: Graph) -> TransmissionData:
    """All-pairs BFS."""
    dist = np.vstack([bfs_distances(g, s) for s in range(g.n)])
    dist.setflags(write=False)
    transmissions = dist.sum(axis=1)
    transmissions.setflags(write=False)
    return TransmissionData(dist=dist, transmissions=transmissions, diameter=int(dist.max()))


# =============================================================================
# Graph Matrices
# =============================================================================

def adjacency_matrix(g: Graph) -> NonnegativeMatrix:
    return NonnegativeMatrix(g.adjacency)


def signless_laplacian(g: Graph) -> NonnegativeMatrix:
    """Q = D + A."""
    return NonnegativeMatrix(np.diag(g.degrees) + g.adjacency)


def distance_signless_laplacian(g: Graph) -> NonnegativeMatrix:
    """Transmission diagonal plus distance matrix."""
    data = distance_matrix(g)
    return NonnegativeMatrix(np.diag(data.transmissions) + data.dist)


# =============================================================================
# Generalized Averages
# =============================================================================

def generalized_average_degree(g: Graph, alpha: float) -> DegreeData:
    degrees = g.degrees
    powers = _power(degrees, alpha)
    ratios = g.adjacency * powers[np.newaxis, :] / powers[:, np.newaxis]
    return DegreeData(
        degrees=degrees,
        max_degree=int(degrees.max()),
        alpha=alpha,
        alpha_avg=(g.adjacency @ powers) / powers,
        off_max=float(ratios.max()),
    )


def generalized_average_transmission(g: Graph, alpha: float) -> TransmissionData:
    return distance_matrix(g).at_alpha(alpha)

