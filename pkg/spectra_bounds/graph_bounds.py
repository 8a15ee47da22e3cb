"""
Graph Bounds

The bounds core instantiated for the four graph matrices with a power scale
vector:

- adj, q   -> c = (d_1^a, ..., d_n^a)     (degree powers)
- dist, dq -> c = (T_1^a, ..., T_n^a)     (transmission powers)

so that the scaled row sums become the generalized average degree
(^a m)_i, (^a m)_i + d_i, the generalized average transmission (^a M)_i and
(^a M)_i + T_i respectively. alpha = 0 gives the plain degree/transmission
bounds, alpha = 1 the average-degree/average-transmission ones.

Rank index i always refers to the sorted scaled row sums, not to a vertex label.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from .bounds import (
    DEFAULT_TOLERANCES,
    ScaleVector,
    Tolerances,
    all_upper_bounds,
    best_upper_bound,
    lower_bound,
    upper_bound,
)
from .errors import TooFewVertices, UnknownMatrixKind
from .graph import (
    Graph,
    adjacency_matrix,
    distance_matrix,
    distance_signless_laplacian,
    generalized_average_degree,
    signless_laplacian,
)
from .matrix import IrreducibleMatrix, NonnegativeMatrix, spectral_radius
from .models import MATRIX_KINDS, BoundReport, GraphBoundRequest

logger = logging.getLogger("spectra.graph_bounds")

KIND_ALIASES = {
    "adjacency": "adj",
    "signless-laplacian": "q",
    "distance": "dist",
    "distance-signless-laplacian": "dq",
}


def canonical_kind(kind: str) -> str:
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in MATRIX_KINDS:
        raise UnknownMatrixKind(kind)
    return kind


# =============================================================================
# Matrices and Scale Vectors
# =============================================================================

def graph_matrix(g: Graph, kind: str) -> IrreducibleMatrix:
    """The matrix of the given kind; irreducible because g is connected."""
    kind = canonical_kind(kind)
    if kind == "adj":
        m = adjacency_matrix(g)
    elif kind == "q":
        m = signless_laplacian(g)
    elif kind == "dist":
        m = NonnegativeMatrix(distance_matrix(g).dist)
    else:
        m = distance_signless_laplacian(g)
    return IrreducibleMatrix(m)


def scale_vector_for(g: Graph, kind: str, alpha: float) -> ScaleVector:
    kind = canonical_kind(kind)
    base = g.degrees if kind in ("adj", "q") else distance_matrix(g).transmissions
    if alpha == 0:
        return ScaleVector.ones(g.n)
    return ScaleVector(np.asarray(base, dtype=float) ** alpha)


def graph_rho(g: Graph, kind: str, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    return spectral_radius(graph_matrix(g, kind), tol.oracle, tol.max_iter).rho


# =============================================================================
# Structural Equality Classes
# =============================================================================

@dataclass(frozen=True)
class StructuralClass:
    """
    complete | regular | pseudo-regular | star-like | bidegreed | transmission-regular | none

    t is set for the patterns d_1 = ... = d_{t-1} = n-1 > d_t = ... = d_n.
    """

    name: str
    t: Optional[int] = None

    @property
    def label(self) -> str:
        return f"{self.name}(t={self.t})" if self.t is not None else self.name


def structural_equality_class(g: Graph, alpha: float, kind: str) -> StructuralClass:
    """
    Degree (adj, q) or transmission (dist, dq) pattern under which the graph
    bounds are known to be attained. For alpha < 0 the degree patterns collapse to
    the complete graph.
    """
    kind = canonical_kind(kind)
    degrees = g.degrees
    n = g.n

    if np.all(degrees == n - 1):
        return StructuralClass("complete")

    if kind in ("dist", "dq"):
        transmissions = distance_matrix(g).transmissions
        if np.all(transmissions == transmissions[0]):
            return StructuralClass("transmission-regular")
        return StructuralClass("none")

    if np.all(degrees == degrees[0]):
        return StructuralClass("regular")
    if alpha < 0:
        return StructuralClass("none")

    dominating = int(np.sum(degrees == n - 1))
    rest = degrees[degrees != n - 1]
    if dominating >= 1 and np.all(rest == rest[0]):
        if dominating == 1:
            return StructuralClass("star-like", t=2)
        if alpha == 0:
            return StructuralClass("bidegreed", t=dominating + 1)

    average = generalized_average_degree(g, 1.0).alpha_avg
    if np.allclose(average, average[0], rtol=0, atol=1e-12):
        return StructuralClass("pseudo-regular")
    return StructuralClass("none")


# =============================================================================
# Generic Graph Bound
# =============================================================================

def _check_vertices(g: Graph):
    if g.n < 2:
        raise TooFewVertices(g.n)


def _annotate(report: BoundReport, g: Graph, kind: str, alpha: float) -> BoundReport:
    structure = structural_equality_class(g, alpha, kind)
    equality = report.equality
    if equality.holds != (equality.branch != "not-attained"):
        logger.warning(
            f"Equality disagreement kind={kind} alpha={alpha} i={report.index_i} "
            f"side={report.side}: numeric holds={equality.holds}, "
            f"structural branch={equality.label}, class={structure.label}"
        )
    return report.model_copy(update={"kind": kind, "alpha": alpha, "structure": structure.label})


def graph_upper(g: Graph, kind: str, alpha: float, i: int, rho: Optional[float] = None,
                tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    _check_vertices(g)
    kind = canonical_kind(kind)
    report = upper_bound(graph_matrix(g, kind), scale_vector_for(g, kind, alpha), i, rho, tol)
    return _annotate(report, g, kind, alpha)


def graph_lower(g: Graph, kind: str, alpha: float, rho: Optional[float] = None,
                tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    _check_vertices(g)
    kind = canonical_kind(kind)
    report = lower_bound(graph_matrix(g, kind), scale_vector_for(g, kind, alpha), rho, tol)
    return _annotate(report, g, kind, alpha)


def graph_best_upper(g: Graph, kind: str, alpha: float, rho: Optional[float] = None,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    _check_vertices(g)
    kind = canonical_kind(kind)
    report = best_upper_bound(graph_matrix(g, kind), scale_vector_for(g, kind, alpha), rho, tol)
    return _annotate(report, g, kind, alpha)


def graph_all_upper(g: Graph, kind: str, alpha: float, rho: Optional[float] = None,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> List[BoundReport]:
    _check_vertices(g)
    kind = canonical_kind(kind)
    reports = all_upper_bounds(graph_matrix(g, kind), scale_vector_for(g, kind, alpha), rho, tol)
    return [_annotate(report, g, kind, alpha) for report in reports]


# =============================================================================
# Adjacency and Signless Laplacian
# =============================================================================

def adjacency_upper(g: Graph, alpha: float, i: int, rho: Optional[float] = None,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """
    rho(A) <= ((^a m)_i - N + sqrt(((^a m)_i + N)^2 + 4N sum_{k<i} ((^a m)_k - (^a m)_i))) / 2
    with N = max over adjacent i~j of d_j^a / d_i^a.
    """
    return graph_upper(g, "adj", alpha, i, rho, tol)


def adjacency_upper_avg(g: Graph, i: int, rho: Optional[float] = None,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Average-degree form (alpha = 1); attained exactly for pseudo-regular graphs."""
    return adjacency_upper(g, 1.0, i, rho, tol)


def adjacency_lower(g: Graph, alpha: float, rho: Optional[float] = None,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return graph_lower(g, "adj", alpha, rho, tol)


def signless_upper(g: Graph, alpha: float, i: int, rho: Optional[float] = None,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """
    Scaled row sums (^a m)_i + d_i, M = max degree, and the same N as the
    adjacency bound (Q and A agree off the diagonal).
    """
    return graph_upper(g, "q", alpha, i, rho, tol)


def signless_upper_avg(g: Graph, i: int, rho: Optional[float] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return signless_upper(g, 1.0, i, rho, tol)


def signless_lower(g: Graph, alpha: float, rho: Optional[float] = None,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return graph_lower(g, "q", alpha, rho, tol)


# =============================================================================
# Distance and Distance Signless Laplacian
# =============================================================================

def distance_upper(g: Graph, alpha: float, i: int, rho: Optional[float] = None,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """N ranges over all ordered pairs i != j; at alpha = 0 it is the diameter."""
    return graph_upper(g, "dist", alpha, i, rho, tol)


def distance_upper_avg(g: Graph, i: int, rho: Optional[float] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return distance_upper(g, 1.0, i, rho, tol)


def distance_lower(g: Graph, alpha: float, rho: Optional[float] = None,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return graph_lower(g, "dist", alpha, rho, tol)


def distance_lower_avg(g: Graph, rho: Optional[float] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return distance_lower(g, 1.0, rho, tol)


def dsl_upper(g: Graph, alpha: float, i: int, rho: Optional[float] = None,
              tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Scaled row sums (^a M)_i + T_i with M = max transmission."""
    return graph_upper(g, "dq", alpha, i, rho, tol)


def dsl_upper_avg(g: Graph, i: int, rho: Optional[float] = None,
                  tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return dsl_upper(g, 1.0, i, rho, tol)


def dsl_lower(g: Graph, alpha: float, rho: Optional[float] = None,
              tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """S = min transmission, T = min off-diagonal scaled distance."""
    return graph_lower(g, "dq", alpha, rho, tol)


def dsl_lower_avg(g: Graph, rho: Optional[float] = None,
                  tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return dsl_lower(g, 1.0, rho, tol)


# =============================================================================
# Dispatcher
# =============================================================================

LOWER_BOUNDS: Dict[str, Callable[..., BoundReport]] = {
    "adj": adjacency_lower,
    "q": signless_lower,
    "dist": distance_lower,
    "dq": dsl_lower,
}


def graph_bound(g: Graph, request: GraphBoundRequest, rho: Optional[float] = None,
                tol: Tolerances = DEFAULT_TOLERANCES) -> List[BoundReport]:
    """
    Evaluate one request. index "all" yields one report per rank, "best" the
    minimum over ranks; the lower side ignores the index.
    """
    kind = canonical_kind(request.kind)
    if rho is None:
        _check_vertices(g)
        rho = graph_rho(g, kind, tol)

    if request.side == "lower":
        return [LOWER_BOUNDS[kind](g, request.alpha, rho, tol)]
    if request.index == "all":
        return graph_all_upper(g, kind, request.alpha, rho, tol)
    if request.index == "best":
        return [graph_best_upper(g, kind, request.alpha, rho, tol)]
    return [graph_upper(g, kind, request.alpha, request.index, rho, tol)]
