"""
Report Models

Pydantic models for everything that leaves the numeric core: oracle output,
bound reports with their equality diagnosis, CLI result rows and run
configuration. All models are frozen.
"""
import math
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Side = Literal["upper", "lower"]
Branch = Literal["all-equal", "structured", "not-attained"]
MatrixKind = Literal["adj", "q", "dist", "dq"]
OutputFormat = Literal["table", "csv", "json"]

MATRIX_KINDS: Tuple[str, ...] = ("adj", "q", "dist", "dq")


def round_sig(value: float, digits: int = 12) -> float:
    """Round to `digits` significant digits (the precision written to CSV/JSON)."""
    if value == 0 or not math.isfinite(value):
        return value
    return float(f"{value:.{digits}g}")


# =============================================================================
# Oracle / Bound Models
# =============================================================================

class SpectralEstimate(BaseModel):
    """Power-iteration output: rho, residual of the Perron pair, iterations used."""
    model_config = ConfigDict(frozen=True)

    rho: float
    residual: float
    iterations: int
    perron_vector: Tuple[float, ...]

    def vector(self) -> np.ndarray:
        return np.array(self.perron_vector, dtype=float)


class EqualityDiagnosis(BaseModel):
    """
    Numeric attainment and structural branch, reported independently.

    holds      -> |bound - rho| within the attainment tolerance
    branch     -> all-equal | structured | not-attained
    witness_t  -> the t of the structured characterization (2 <= t <= i)
    """
    model_config = ConfigDict(frozen=True)

    holds: bool
    branch: Branch
    witness_t: Optional[int] = None

    @property
    def label(self) -> str:
        if self.branch == "structured":
            return f"structured(t={self.witness_t})"
        return self.branch


class BoundReport(BaseModel):
    """One bound evaluation."""
    model_config = ConfigDict(frozen=True)

    value: float
    side: Side
    index_i: int
    alpha: Optional[float] = None
    equality: EqualityDiagnosis
    rho: float
    kind: Optional[str] = None
    structure: Optional[str] = None

    @property
    def gap(self) -> float:
        return self.value - self.rho


# =============================================================================
# CLI Models
# =============================================================================

class ResultRow(BaseModel):
    """One CSV/JSON/table row of `bound`. Floats are stored at output precision."""
    model_config = ConfigDict(frozen=True)

    kind: str
    alpha: Optional[float]
    i: int
    side: Side
    bound: float
    rho: float
    gap: float
    equality: bool
    branch: str

    @classmethod
    def from_report(cls, report: BoundReport, digits: int = 12) -> "ResultRow":
        return cls(
            kind=report.kind or "matrix",
            alpha=report.alpha,
            i=report.index_i,
            side=report.side,
            bound=round_sig(report.value, digits),
            rho=round_sig(report.rho, digits),
            gap=round_sig(report.gap, digits),
            equality=report.equality.holds,
            branch=report.equality.label,
        )


class SweepRow(BaseModel):
    """Best upper gap and lower gap for one (kind, alpha)."""
    model_config = ConfigDict(frozen=True)

    kind: str
    alpha: float
    best_i: int
    upper_gap: float
    lower_gap: float
    rho: float


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    instance: str
    kind: str
    alpha: Optional[float]
    i: int
    side: Side
    bound: float
    rho: float


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    trials: int
    seed: int
    input_kind: Literal["matrix", "graph"]
    checked: int
    violations: List[Violation]

    @property
    def passed(self) -> bool:
        return not self.violations


class RunConfig(BaseModel):
    """Everything one CLI invocation needs."""
    model_config = ConfigDict(frozen=True)

    input_path: Optional[Path] = None
    input_kind: Literal["matrix", "graph"] = "graph"
    matrix_kinds: Tuple[MatrixKind, ...] = MATRIX_KINDS
    alphas: Tuple[float, ...] = (0.0,)
    indices: Union[Literal["all", "best"], Tuple[int, ...]] = "all"
    sides: Tuple[Side, ...] = ("upper", "lower")
    output_format: OutputFormat = "table"
    tol: float = 1e-12
    max_iter: int = 100_000
    attain_tol: float = 1e-6
    structural_tol: float = 1e-9
    radicand_tol: float = 1e-12
    threads: int = 1

    @field_validator("alphas")
    @classmethod
    def _finite_alphas(cls, alphas):
        if not alphas:
            raise ValueError("at least one alpha is required")
        if not all(math.isfinite(a) for a in alphas):
            raise ValueError("alphas must be finite reals")
        return alphas

    @field_validator("sides", "matrix_kinds")
    @classmethod
    def _non_empty(cls, values):
        if not values:
            raise ValueError("at least one value is required")
        return values

    @field_validator("indices")
    @classmethod
    def _positive_indices(cls, indices):
        if not isinstance(indices, str) and (not indices or min(indices) < 1):
            raise ValueError("indices must be 'all', 'best' or positive integers")
        return indices

    @model_validator(mode="after")
    def _positive_numbers(self):
        if self.tol <= 0 or self.max_iter < 1 or self.threads < 1:
            raise ValueError("tol must be > 0, max_iter and threads >= 1")
        return self


class GraphBoundRequest(BaseModel):
    """Selects one graph-bound family: matrix kind, alpha, rank index (or all/best), side."""
    model_config = ConfigDict(frozen=True)

    kind: MatrixKind
    alpha: float
    index: Union[int, Literal["all", "best"]] = "best"
    side: Side = "upper"

    @field_validator("alpha")
    @classmethod
    def _finite_alpha(cls, alpha):
        if not math.isfinite(alpha):
            raise ValueError("alpha must be a finite real")
        return alpha
