"""
Bounds Core

Upper and lower bounds on the spectral radius of a nonnegative irreducible
matrix A through a positive scale vector c.

With B = U^-1 A U, U = diag(c), the scaled row sums are M_i = sum_j a_ij c_j / c_i.
Taking M_1 >= ... >= M_n (rank order), M = max a_ii, S = min a_ii,
N = max_{i!=j} a_ij c_j / c_i and T = min_{i!=j} a_ij c_j / c_i:

    rho(A) <= (M_i + M - N + sqrt((M_i - M + N)^2 + 4N sum_{k<i} (M_k - M_i))) / 2
    rho(A) >= (M_n + S - T + sqrt((M_n - S + T)^2 + 4T sum_{k<n} (M_k - M_n))) / 2

c = all-ones gives the plain row-sum forms.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NonPositiveScale,
    NonZeroDiagonal,
    NumericError,
    ZeroOffDiagonalMax,
)
from .matrix import IrreducibleMatrix, NonnegativeMatrix, spectral_radius
from .models import BoundReport, EqualityDiagnosis

logger = logging.getLogger("spectra.bounds")


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True)
class Tolerances:
    """attain: relative |bound - rho|; structural: equality conditions; radicand: clamp window."""

    attain: float = 1e-6
    structural: float = 1e-9
    radicand: float = 1e-12
    oracle: float = 1e-12
    max_iter: int = 100_000


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True, eq=False)
class ScaleVector:
    """Strictly positive vector c."""

    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=float).reshape(-1)
        for k, value in enumerate(c):
            if not (math.isfinite(value) and value > 0):
                raise NonPositiveScale(k, float(value))
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @classmethod
    def ones(cls, n: int) -> "ScaleVector":
        return cls(np.ones(n))

    @property
    def n(self) -> int:
        return self.c.shape[0]


@dataclass(frozen=True, eq=False)
class ScaledProfile:
    """
    Scaled row sums and the four extremal entries of B = U^-1 A U.

    m_values are in natural (vertex) order; order is the stable descending
    sort permutation (0-based), so m_values[order] is M_1 >= ... >= M_n.
    """

    scaled: NonnegativeMatrix
    m_values: np.ndarray
    order: np.ndarray
    diag_max: float
    diag_min: float
    off_max: float
    off_min: float

    @property
    def n(self) -> int:
        return self.m_values.shape[0]

    @property
    def sorted_values(self) -> np.ndarray:
        return self.m_values[self.order]

    def ranked_matrix(self) -> np.ndarray:
        """B with rows and columns in rank order."""
        return self.scaled.entries[np.ix_(self.order, self.order)]


# =============================================================================
# Scaled Profile
# =============================================================================

def _check_scale(m: IrreducibleMatrix, c: ScaleVector):
    if c.n != m.n:
        raise DimensionMismatch(m.n, c.n)


def _check_index(i: int, n: int):
    if not 1 <= i <= n:
        raise IndexOutOfRange(i, n)


def scale_similar(m: IrreducibleMatrix, c: ScaleVector) -> IrreducibleMatrix:
    """U^-1 A U with U = diag(c); same spectrum and same support as A."""
    _check_scale(m, c)
    b = m.entries * c.c[np.newaxis, :] / c.c[:, np.newaxis]
    return IrreducibleMatrix(NonnegativeMatrix(b))


def scaled_profile(m: IrreducibleMatrix, c: ScaleVector) -> ScaledProfile:
    b = scale_similar(m, c).matrix
    n = m.n
    m_values = b.entries.sum(axis=1)
    m_values.setflags(write=False)
    order = np.argsort(-m_values, kind="stable")
    order.setflags(write=False)

    off = b.entries[~np.eye(n, dtype=bool)]
    return ScaledProfile(
        scaled=b,
        m_values=m_values,
        order=order,
        diag_max=b.diag_max,
        diag_min=b.diag_min,
        off_max=float(off.max()) if off.size else 0.0,
        off_min=float(off.min()) if off.size else 0.0,
    )


# =============================================================================
# Bound Formulas
# =============================================================================

def _clamp_radicand(radicand: float, tolerance: float) -> float:
    if radicand >= 0:
        return radicand
    if -radicand <= tolerance * (1 + abs(radicand)):
        return 0.0
    raise NumericError(f"Negative radicand {radicand:.3e} beyond rounding tolerance")


def _two_term_bound(pivot: float, diag: float, off: float, deviation: float, tol: Tolerances) -> float:
    """(pivot + diag - off + sqrt((pivot - diag + off)^2 + 4 off deviation)) / 2"""
    radicand = _clamp_radicand((pivot - diag + off) ** 2 + 4 * off * deviation, tol.radicand)
    return (pivot + diag - off + math.sqrt(radicand)) / 2


def _upper_value(profile: ScaledProfile, i: int, tol: Tolerances) -> float:
    if profile.off_max <= 0:
        raise ZeroOffDiagonalMax()
    values = profile.sorted_values
    pivot = float(values[i - 1])
    deviation = float(np.sum(values[: i - 1] - pivot))
    return _two_term_bound(pivot, profile.diag_max, profile.off_max, deviation, tol)


def _lower_value(profile: ScaledProfile, tol: Tolerances) -> float:
    values = profile.sorted_values
    pivot = float(values[-1])
    deviation = float(np.sum(values[:-1] - pivot))
    return _two_term_bound(pivot, profile.diag_min, profile.off_min, deviation, tol)


def _oracle_rho(m: IrreducibleMatrix, rho: Optional[float], tol: Tolerances) -> float:
    if rho is not None:
        return rho
    return spectral_radius(m, tol.oracle, tol.max_iter).rho


def _upper_report(profile: ScaledProfile, i: int, rho: float, tol: Tolerances) -> BoundReport:
    value = _upper_value(profile, i, tol)
    logger.debug(f"upper_bound n={profile.n} i={i} value={value:.12g} rho={rho:.12g}")
    return BoundReport(
        value=value,
        side="upper",
        index_i=i,
        equality=_diagnose_upper(profile, i, value, rho, tol),
        rho=rho,
    )


def upper_bound(
    m: IrreducibleMatrix,
    c: ScaleVector,
    i: int,
    rho: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundReport:
    """Scale-vector upper bound at rank i (1-based). rho is computed by the oracle when omitted."""
    profile = scaled_profile(m, c)
    _check_index(i, m.n)
    return _upper_report(profile, i, _oracle_rho(m, rho, tol), tol)


def lower_bound(
    m: IrreducibleMatrix,
    c: ScaleVector,
    rho: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundReport:
    """Scale-vector lower bound (pivot M_n). T = 0 is allowed and gives max(M_n, S)."""
    profile = scaled_profile(m, c)
    value = _lower_value(profile, tol)
    rho = _oracle_rho(m, rho, tol)
    logger.debug(f"lower_bound n={m.n} value={value:.12g} rho={rho:.12g}")
    return BoundReport(
        value=value,
        side="lower",
        index_i=m.n,
        equality=_diagnose_lower(profile, value, rho, tol),
        rho=rho,
    )


def all_upper_bounds(
    m: IrreducibleMatrix,
    c: ScaleVector,
    rho: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> List[BoundReport]:
    profile = scaled_profile(m, c)
    rho = _oracle_rho(m, rho, tol)
    return [_upper_report(profile, i, rho, tol) for i in range(1, m.n + 1)]


def best_upper_bound(
    m: IrreducibleMatrix,
    c: ScaleVector,
    rho: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundReport:
    """Minimum over i of the upper bound; ties go to the smallest i."""
    best = None
    for report in all_upper_bounds(m, c, rho, tol):
        if best is None or report.value < best.value:
            best = report
    return best


# =============================================================================
# Row-Sum Specializations (c = all-ones)
# =============================================================================

def _check_zero_diagonal(m: IrreducibleMatrix):
    diagonal = np.diag(m.entries)
    nonzero = np.flatnonzero(diagonal)
    if nonzero.size:
        k = int(nonzero[0])
        raise NonZeroDiagonal(k, float(diagonal[k]))


def upper_bound_rowsum(m: IrreducibleMatrix, i: int, rho: Optional[float] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return upper_bound(m, ScaleVector.ones(m.n), i, rho, tol)


def upper_bound_zero_diag(m: IrreducibleMatrix, i: int, rho: Optional[float] = None,
                          tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Row-sum upper bound for zero-diagonal A (M = 0)."""
    _check_zero_diagonal(m)
    return upper_bound_rowsum(m, i, rho, tol)


def lower_bound_rowsum(m: IrreducibleMatrix, rho: Optional[float] = None,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    return lower_bound(m, ScaleVector.ones(m.n), rho, tol)


def lower_bound_zero_diag(m: IrreducibleMatrix, rho: Optional[float] = None,
                          tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    _check_zero_diagonal(m)
    return lower_bound_rowsum(m, rho, tol)


# =============================================================================
# Equality Diagnosis
# =============================================================================

def _attained(bound_value: float, rho: float, tol: Tolerances) -> bool:
    return abs(bound_value - rho) <= tol.attain * (1 + rho)


def _values_equal(values: np.ndarray, scale: float, tol: Tolerances) -> bool:
    return values.size == 0 or float(values.max() - values.min()) <= tol.structural * scale


def _structured_t(profile: ScaledProfile, diag: float, off: float, t_max: int, tol: Tolerances) -> Optional[int]:
    """
    Smallest 2 <= t <= t_max (rank order) with
      (i)   b_kk = diag             for k < t
      (ii)  b_kl = off              for every k != l, l < t
      (iii) M_t = ... = M_n
    """
    b = profile.ranked_matrix()
    values = profile.sorted_values
    scale = 1 + max(float(np.abs(values).max()), abs(diag), abs(off))
    def close(x, y):
        return abs(x - y) <= tol.structural * scale

    n = profile.n

    for t in range(2, t_max + 1):
        if not all(close(b[k, k], diag) for k in range(t - 1)):
            continue
        if not all(close(b[k, l], off) for l in range(t - 1) for k in range(n) if k != l):
            continue
        if _values_equal(values[t - 1:], scale, tol):
            return t
    return None


def _diagnose(profile: ScaledProfile, holds: bool, diag: float, off: float, t_max: int,
              tol: Tolerances) -> EqualityDiagnosis:
    values = profile.sorted_values
    if _values_equal(values, 1 + float(np.abs(values).max()), tol):
        return EqualityDiagnosis(holds=holds, branch="all-equal")
    t = _structured_t(profile, diag, off, t_max, tol) if t_max >= 2 else None
    if t is not None:
        return EqualityDiagnosis(holds=holds, branch="structured", witness_t=t)
    return EqualityDiagnosis(holds=holds, branch="not-attained")


def _diagnose_upper(profile: ScaledProfile, i: int, bound_value: float, rho: float,
                    tol: Tolerances) -> EqualityDiagnosis:
    holds = _attained(bound_value, rho, tol)
    return _diagnose(profile, holds, profile.diag_max, profile.off_max, i, tol)


def _diagnose_lower(profile: ScaledProfile, bound_value: float, rho: float,
                    tol: Tolerances) -> EqualityDiagnosis:
    holds = _attained(bound_value, rho, tol)
    t_max = profile.n if profile.off_min > 0 else 0
    return _diagnose(profile, holds, profile.diag_min, profile.off_min, t_max, tol)


def equality_diagnosis_upper(m: IrreducibleMatrix, c: ScaleVector, i: int, bound_value: float,
                             rho: float, tol: Tolerances = DEFAULT_TOLERANCES) -> EqualityDiagnosis:
    """Numeric attainment plus the structural branch of the upper-bound characterization."""
    return _diagnose_upper(scaled_profile(m, c), i, bound_value, rho, tol)


def equality_diagnosis_lower(m: IrreducibleMatrix, c: ScaleVector, bound_value: float,
                             rho: float, tol: Tolerances = DEFAULT_TOLERANCES) -> EqualityDiagnosis:
    """
    As the upper diagnosis with S, T in place of M, N; the structured branch
    additionally needs T > 0. With T = 0 and unequal M_i nothing is claimed
    beyond not-attained.
    """
    return _diagnose_lower(scaled_profile(m, c), bound_value, rho, tol)
