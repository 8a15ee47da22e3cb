"""
Matrix Core

Dense nonnegative matrices, the irreducibility check and the spectral-radius
oracle every bound is verified against.

- NonnegativeMatrix: square, finite, entrywise >= 0, read-only storage
- IrreducibleMatrix: support digraph strongly connected (validated wrapper)
- spectral_radius: power iteration on A + I, infinity-norm normalization
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .errors import NegativeEntry, NoConvergence, NonFiniteEntry, NotSquare, ReducibleMatrix
from .models import SpectralEstimate

logger = logging.getLogger("spectra.matrix")

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000


# =============================================================================
# Matrix Types
# =============================================================================

@dataclass(frozen=True, eq=False)
class NonnegativeMatrix:
    """n x n matrix with every entry >= 0."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise NotSquare(a.shape)
        non_finite = np.argwhere(~np.isfinite(a))
        if non_finite.size:
            k, l = non_finite[0]
            raise NonFiniteEntry(int(k), int(l), float(a[k, l]))
        negative = np.argwhere(a < 0)
        if negative.size:
            k, l = negative[0]
            raise NegativeEntry(int(k), int(l), float(a[k, l]))
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "NonnegativeMatrix":
        return cls(np.array(rows, dtype=float))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def row_sums(self) -> np.ndarray:
        return self.entries.sum(axis=1)

    @property
    def diag_max(self) -> float:
        """M = max_i a_ii."""
        return float(np.max(np.diag(self.entries)))

    @property
    def diag_min(self) -> float:
        """S = min_i a_ii."""
        return float(np.min(np.diag(self.entries)))

    def permuted(self, order: Sequence[int]) -> "NonnegativeMatrix":
        """P A P^T: row/column k of the result is row/column order[k] of A."""
        idx = np.asarray(order, dtype=int)
        return NonnegativeMatrix(self.entries[np.ix_(idx, idx)])


@dataclass(frozen=True, eq=False)
class IrreducibleMatrix:
    """A NonnegativeMatrix whose support digraph is strongly connected."""

    matrix: NonnegativeMatrix

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries

    @property
    def n(self) -> int:
        return self.matrix.n


# =============================================================================
# Strong Connectivity
# =============================================================================

def strongly_connected_components(m: NonnegativeMatrix) -> List[List[int]]:
    """
    Tarjan's SCC algorithm on the support digraph (edge k -> l iff a_kl > 0).

    Iterative to avoid recursion limits. Components come out sink-first.
    """
    n = m.n
    successors = [np.flatnonzero(m.entries[k] > 0).tolist() for k in range(n)]
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    components: List[List[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]

        while work:
            v, pos = work[-1]
            if pos < len(successors[v]):
                work[-1] = (v, pos + 1)
                w = successors[v][pos]
                if index[w] == -1:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))

    return components


def strongly_connected(m: NonnegativeMatrix) -> bool:
    """True iff the support digraph has exactly one strongly connected component."""
    return len(strongly_connected_components(m)) == 1


def validate_irreducible(m: NonnegativeMatrix) -> IrreducibleMatrix:
    """Wrap m as irreducible, or raise ReducibleMatrix with a pair (k, l) lacking a path k -> l."""
    components = strongly_connected_components(m)
    if len(components) > 1:
        # the first component Tarjan closes is a sink: nothing outside it is reachable
        sink = set(components[0])
        k = components[0][0]
        l = next(v for v in range(m.n) if v not in sink)
        raise ReducibleMatrix(k, l)
    return IrreducibleMatrix(m)


# =============================================================================
# Spectral Radius Oracle
# =============================================================================

def spectral_radius(
    m: IrreducibleMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralEstimate:
    """
    Perron root of an irreducible nonnegative matrix.

    Power iteration on A + I (primitive, hence convergent) from the all-ones
    vector, normalized so that max(v) = 1. Stops once ||A v - rho v||_inf is at
    most max(tol, 4 sqrt(n) eps (1 + ||A||_inf)), the second term being the
    rounding floor of the residual.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError(f"Need tol > 0 and max_iter >= 1, got tol={tol}, max_iter={max_iter}")

    a = m.entries
    if m.n == 1:
        return SpectralEstimate(rho=float(a[0, 0]), residual=0.0, iterations=0, perron_vector=(1.0,))

    floor = 4.0 * math.sqrt(m.n) * np.finfo(float).eps * (1.0 + float(np.max(a.sum(axis=1))))
    stop = max(tol, floor)
    if stop > tol:
        logger.debug(f"Oracle tolerance raised to rounding floor {stop:.3e} for n={m.n}")

    v = np.ones(m.n)
    residual = float("inf")
    for iteration in range(1, max_iter + 1):
        w = a @ v
        rho = float(v @ w) / float(v @ v)
        residual = float(np.max(np.abs(w - rho * v)))
        if residual <= stop:
            logger.debug(f"Oracle converged: n={m.n} rho={rho:.12g} iterations={iteration}")
            return SpectralEstimate(
                rho=max(rho, 0.0),
                residual=residual,
                iterations=iteration,
                perron_vector=tuple(float(x) for x in v),
            )
        y = w + v
        v = y / np.max(y)

    raise NoConvergence(max_iter, residual)
