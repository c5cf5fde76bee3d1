"""Transversal action of M2(F2) on codes and the endomorphism algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache

from transversal_class.code import StabilizerCode
from transversal_class.endo.catalog import IDENTITY, ZERO, AlgebraEntry, lookup_mask
from transversal_class.errors import (
    AlgebraClosureError,
    DimensionMismatchError,
    UnknownAlgebraError,
)
from transversal_class.f2core import F2Matrix, F2Vector, invert
from transversal_class.symplectic import act_pairs

logger = logging.getLogger(__name__)


def matrix_code(m: F2Matrix) -> int:
    """Encode a 2x2 matrix as its 4-bit catalog code."""
    if m.shape != (2, 2):
        raise DimensionMismatchError("matrix_code", m.shape, (2, 2))
    return m.data[0] | (m.data[1] << 2)


@cache
def code_matrix(code: int) -> F2Matrix:
    """Decode a 4-bit catalog code into a 2x2 matrix."""
    return F2Matrix((code & 0b11, code >> 2), 2)


def _mul_code(a: int, b: int) -> int:
    a00, a01, a10, a11 = a & 1, (a >> 1) & 1, (a >> 2) & 1, a >> 3
    b00, b01, b10, b11 = b & 1, (b >> 1) & 1, (b >> 2) & 1, b >> 3
    c00 = (a00 & b00) ^ (a01 & b10)
    c01 = (a00 & b01) ^ (a01 & b11)
    c10 = (a10 & b00) ^ (a11 & b10)
    c11 = (a10 & b01) ^ (a11 & b11)
    return c00 | (c01 << 1) | (c10 << 2) | (c11 << 3)


MUL: tuple[tuple[int, ...], ...] = tuple(
    tuple(_mul_code(a, b) for b in range(16)) for a in range(16)
)
"""Multiplication table of M2(F2) on 4-bit codes."""


def bar_code(code: int) -> int:
    """``J a^t J`` on codes: exchanges the two diagonal entries."""
    return (code & 0b0110) | ((code & 1) << 3) | (code >> 3)


def _codes(mask: int) -> tuple[int, ...]:
    return tuple(c for c in range(16) if (mask >> c) & 1)


@dataclass(frozen=True)
class EndoAlgebra:
    """A subalgebra of M2(F2), stored as a 16-bit mask of element codes.

    Raises:
        AlgebraClosureError: If the set misses 0 or I, or is not closed.
    """

    mask: int

    def __post_init__(self) -> None:
        codes = _codes(self.mask)
        if not (self.mask >> ZERO) & 1 or not (self.mask >> IDENTITY) & 1:
            raise AlgebraClosureError(f"Element set {self.mask:#06x} lacks 0 or I")
        for a in codes:
            for b in codes:
                if not (self.mask >> (a ^ b)) & 1 or not (self.mask >> MUL[a][b]) & 1:
                    raise AlgebraClosureError(
                        f"Element set {self.mask:#06x} is not closed at ({a}, {b})"
                    )

    @classmethod
    def from_elements(cls, elements: list[F2Matrix] | tuple[F2Matrix, ...]) -> EndoAlgebra:
        mask = 0
        for m in elements:
            mask |= 1 << matrix_code(m)
        return cls(mask)

    @property
    def codes(self) -> tuple[int, ...]:
        return _codes(self.mask)

    @property
    def elements(self) -> tuple[F2Matrix, ...]:
        return tuple(code_matrix(c) for c in self.codes)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def dim(self) -> int:
        return self.size.bit_length() - 1

    @property
    def tag(self) -> str:
        return algebra_id(self)

    @property
    def entry(self) -> AlgebraEntry:
        entry = lookup_mask(self.mask)
        if entry is None:
            raise UnknownAlgebraError(self.mask)
        return entry

    def __contains__(self, m: F2Matrix) -> bool:
        return bool((self.mask >> matrix_code(m)) & 1)

    def contains_code(self, code: int) -> bool:
        return bool((self.mask >> code) & 1)

    def issubset(self, other: EndoAlgebra) -> bool:
        return self.mask & ~other.mask == 0

    def is_bar_stable(self) -> bool:
        """True iff ``J a^t J`` stays in the algebra for every element."""
        return all(self.contains_code(bar_code(c)) for c in self.codes)


def act(v: F2Vector, t: F2Matrix) -> F2Vector:
    """Right-multiply every (x, z) pair of `v` by `t`.

    Raises:
        DimensionMismatchError: If `v` has odd length or `t` is not 2x2.
    """
    if v.length % 2:
        raise DimensionMismatchError("act", v.length, "even length")
    if t.shape != (2, 2):
        raise DimensionMismatchError("act", t.shape, (2, 2))
    return F2Vector(v.length, act_pairs(v.bits, t, v.length // 2))


def invariant_under(code: StabilizerCode, t: F2Matrix) -> bool:
    """True iff ``v . t`` lies in C for every v in C; checks the basis only."""
    if t.shape != (2, 2):
        raise DimensionMismatchError("invariant_under", t.shape, (2, 2))
    space = code.space
    return all(space.contains_bits(act_pairs(row, t, code.n)) for row in code.basis)


def endo_algebra(code: StabilizerCode) -> EndoAlgebra:
    """Return every 2x2 matrix whose transversal action preserves C."""
    mask = 0
    for c in range(16):
        if invariant_under(code, code_matrix(c)):
            mask |= 1 << c
    algebra = EndoAlgebra(mask)
    logger.debug("Endomorphism algebra of n=%d code: %d elements", code.n, algebra.size)
    return algebra


def algebra_id(algebra: EndoAlgebra) -> str:
    """Return the catalog tag whose element set equals `algebra`.

    Raises:
        UnknownAlgebraError: If no catalog entry matches.
    """
    return algebra.entry.tag


def conjugate_algebra(algebra: EndoAlgebra, r: F2Matrix) -> EndoAlgebra:
    """Return ``{r^-1 x r : x in algebra}``.

    Raises:
        SingularMatrixError: If `r` is not invertible.
    """
    r_inv = invert(r)
    mask = 0
    for x in algebra.elements:
        mask |= 1 << matrix_code(r_inv @ x @ r)
    return EndoAlgebra(mask)
