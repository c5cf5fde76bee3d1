"""Exception hierarchy for transversal-class."""

from __future__ import annotations


class TransversalError(Exception):
    """Base class for every error raised by transversal-class."""


class ConfigurationError(TransversalError):
    """Raised when settings (e.g. `TCLASS_THREADS`) cannot be parsed."""


class DimensionMismatchError(TransversalError, ValueError):
    """Raised when operands of a GF(2) operation do not conform."""

    def __init__(self, operation: str, left: object, right: object):
        self.operation = operation
        self.left = left
        self.right = right
        super().__init__(f"Dimension mismatch in {operation}: {left} vs {right}")


class SingularMatrixError(TransversalError, ValueError):
    """Raised when inverting a matrix of deficient rank."""

    def __init__(self, size: int, rank: int):
        self.size = size
        self.rank = rank
        super().__init__(f"Matrix of size {size}x{size} is singular (rank {rank})")


class StabParseError(TransversalError, ValueError):
    """Raised when `.stab` text cannot be parsed."""

    def __init__(self, line: int, column: int | None, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"Parse error at {where}: {reason}")


class AnticommutingGeneratorsError(TransversalError, ValueError):
    """Raised when two supplied stabilizer generators anticommute."""

    def __init__(self, first_line: int, second_line: int, first: str = "", second: str = ""):
        self.first_line = first_line
        self.second_line = second_line
        message = f"Generators on lines {first_line} and {second_line} anticommute"
        if first and second:
            message += f": {first} vs {second}"
        super().__init__(message)


class DistanceCapError(TransversalError):
    """Raised when brute-force distance would exceed the enumeration guard."""

    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(f"Distance enumeration cap: n={n} exceeds max_n={max_n}")


class NoLogicalOperatorsError(TransversalError):
    """Raised when asking for the distance of a k=0 code."""

    def __init__(self) -> None:
        super().__init__("Code encodes no logical qubits (k=0); distance is undefined")


class AlgebraClosureError(TransversalError):
    """Raised when a computed endomorphism set is not an algebra.

    This indicates a bug, never bad input.
    """


class UnknownAlgebraError(TransversalError):
    """Raised when an element set matches no catalog algebra."""

    def __init__(self, mask: int):
        self.mask = mask
        super().__init__(f"Element set {mask:#06x} is not an algebra of a stabilizer code")


class CapExceededError(TransversalError):
    """Raised when an enumeration would exceed its resource cap."""

    def __init__(self, cap: int, predicted: int | None = None):
        self.cap = cap
        self.predicted = predicted
        message = f"Enumeration cap of {cap} exceeded"
        if predicted is not None:
            message += f" (predicted order {predicted})"
        super().__init__(message)


class OrderUnavailableError(TransversalError):
    """Raised when a group order is neither enumerable nor given by a formula."""

    def __init__(self, case: int, ell: int):
        self.case = case
        self.ell = ell
        super().__init__(f"Order unavailable for family case {case} at ell={ell}")


class NotGenericCodeError(TransversalError, ValueError):
    """Raised when a generic-code procedure receives a code with endomorphisms."""

    def __init__(self, case: int):
        self.case = case
        super().__init__(f"Expected a generic code (case 5), got case {case}")


class TableauParseError(TransversalError, ValueError):
    """Raised when tableau text is malformed."""

    def __init__(self, line: int | None, reason: str):
        self.line = line
        self.reason = reason
        where = "tableau" if line is None else f"tableau line {line}"
        super().__init__(f"Malformed {where}: {reason}")
