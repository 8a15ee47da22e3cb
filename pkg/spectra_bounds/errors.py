"""
Exceptions

InputError   -> bad matrix / graph / scale vector / configuration (CLI exit 1)
NumericError -> numeric failure such as oracle non-convergence (CLI exit 2)

Vertex labels in messages are 1-based.
"""


class SpectraError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 1


# =============================================================================
# Input errors
# =============================================================================

class InputError(SpectraError, ValueError):
    exit_code = 1


class ConfigError(InputError):
    pass


class NotSquare(InputError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"Matrix must be square, got shape {self.shape}")


class NonFiniteEntry(InputError):
    def __init__(self, row: int, col: int, value: float):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"Non-finite entry a[{row + 1},{col + 1}] = {value}")


class NegativeEntry(InputError):
    def __init__(self, row: int, col: int, value: float):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"Negative entry a[{row + 1},{col + 1}] = {value}")


class ReducibleMatrix(InputError):
    """No directed path k -> l in the support digraph."""

    def __init__(self, k: int, l: int):
        self.k, self.l = k, l
        super().__init__(f"Matrix is reducible: no directed path {k + 1} -> {l + 1}")


class DimensionMismatch(InputError):
    def __init__(self, expected: int, got: int):
        self.expected, self.got = expected, got
        super().__init__(f"Dimension mismatch: expected length {expected}, got {got}")


class NonPositiveScale(InputError):
    def __init__(self, index: int, value: float):
        self.index, self.value = index, value
        super().__init__(f"Scale vector component c[{index + 1}] = {value} is not strictly positive")


class NonZeroDiagonal(InputError):
    def __init__(self, index: int, value: float):
        self.index, self.value = index, value
        super().__init__(f"Diagonal entry a[{index + 1},{index + 1}] = {value} is not zero")


class ZeroOffDiagonalMax(InputError):
    def __init__(self):
        super().__init__("Upper bound needs N > 0 (largest scaled off-diagonal entry is 0)")


class IndexOutOfRange(InputError):
    def __init__(self, i: int, n: int):
        self.i, self.n = i, n
        super().__init__(f"Rank index {i} outside 1..{n}")


class UnknownMatrixKind(InputError):
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"Unknown matrix kind: {kind}")


class TooFewVertices(InputError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Graph bounds need n >= 2 vertices, got {n}")


class ParseError(InputError):
    def __init__(self, line: int, reason: str):
        self.line, self.reason = line, reason
        super().__init__(f"Parse error at line {line}: {reason}")


class VertexOutOfRange(InputError):
    def __init__(self, u: int, v: int, n: int):
        self.u, self.v, self.n = u, v, n
        super().__init__(f"Edge {u + 1}-{v + 1} outside vertex range 1..{n}")


class LoopEdge(InputError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Loop edge at vertex {vertex + 1}")


class DuplicateEdge(InputError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"Duplicate edge {u + 1}-{v + 1}")


class DisconnectedGraph(InputError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Graph is disconnected: vertex {vertex + 1} unreachable from vertex 1")


# =============================================================================
# Numeric errors
# =============================================================================

class NumericError(SpectraError, RuntimeError):
    exit_code = 2


class NoConvergence(NumericError):
    def __init__(self, iterations: int, last_residual: float):
        self.iterations, self.last_residual = iterations, last_residual
        super().__init__(
            f"Power iteration did not converge after {iterations} iterations "
            f"(last residual {last_residual:.3e})"
        )
