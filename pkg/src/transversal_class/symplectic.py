"""The symplectic form on F2^(2n) and the binary symplectic group.

Coordinates are interleaved: qubit ``i`` owns bits ``2i`` (x) and ``2i + 1`` (z).
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache

from transversal_class.errors import DimensionMismatchError
from transversal_class.f2core import F2Matrix, F2Vector, parity


@cache
def even_mask(n: int) -> int:
    """Mask selecting the x bit of each of `n` interleaved pairs."""
    return int("01" * n, 2) if n else 0


def swap_pairs(v: int, n: int) -> int:
    """Exchange x and z inside each pair, i.e. ``v @ J_n``."""
    even = even_mask(n)
    return ((v & even) << 1) | ((v >> 1) & even)


def omega_bits(a: int, c: int, n: int) -> int:
    """Symplectic form on packed vectors."""
    return parity(a & swap_pairs(c, n))


def act_pairs(v: int, t: F2Matrix, n: int) -> int:
    """Right-multiply each of the `n` interleaved pairs of `v` by the 2x2 matrix `t`."""
    even = even_mask(n)
    x = v & even
    z = (v >> 1) & even
    t0, t1 = t.data
    new_x = (x if t0 & 1 else 0) ^ (z if t1 & 1 else 0)
    new_z = (x if t0 & 2 else 0) ^ (z if t1 & 2 else 0)
    return new_x | (new_z << 1)


def j_matrix(n: int) -> F2Matrix:
    """Return J_n, block-diagonal with ``[[0, 1], [1, 0]]`` blocks."""
    return F2Matrix(tuple(1 << (i ^ 1) for i in range(2 * n)), 2 * n)


@dataclass(frozen=True)
class SymplecticForm:
    """The form a J_n c^t on F2^(2n)."""

    n: int
    jn: F2Matrix

    def __call__(self, a: F2Vector, c: F2Vector) -> int:
        return omega(a, c, self.n)


def symplectic_form(n: int) -> SymplecticForm:
    return SymplecticForm(n, j_matrix(n))


def omega(a: F2Vector, c: F2Vector, n: int) -> int:
    """Return 1 iff the Pauli strings for `a` and `c` anticommute.

    Raises:
        DimensionMismatchError: If either vector is not of length ``2n``.
    """
    if a.length != 2 * n or c.length != 2 * n:
        raise DimensionMismatchError("omega", (a.length, c.length), 2 * n)
    return omega_bits(a.bits, c.bits, n)


def is_symplectic(t: F2Matrix, ell: int) -> bool:
    """Return True iff ``t J_ell t^t = J_ell``.

    Raises:
        DimensionMismatchError: If `t` is not ``2ell x 2ell``.
    """
    size = 2 * ell
    if t.shape != (size, size):
        raise DimensionMismatchError("is_symplectic", t.shape, (size, size))
    rows = t.data
    for i in range(size):
        for k in range(i, size):
            expected = 1 if k == (i ^ 1) else 0
            if omega_bits(rows[i], rows[k], ell) != expected:
                return False
    return True


_SP2 = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (1, 0)),
    ((0, 1), (1, 1)),
    ((1, 1), (0, 1)),
    ((1, 0), (1, 1)),
)


@cache
def sp2_elements() -> tuple[F2Matrix, ...]:
    """The six elements of Sp(2, F2) = GL(2, F2).

    Order: identity, Hadamard J, the two facet matrices, then the two
    transvections ``[[1, 1], [0, 1]]`` and ``[[1, 0], [1, 1]]``.
    """
    return tuple(F2Matrix.from_rows(rows) for rows in _SP2)


def sp_order(ell: int) -> int:
    """Order of Sp(2ell, F2): ``2^(ell^2) * prod(4^i - 1)``."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return 2 ** (ell * ell) * math.prod(4**i - 1 for i in range(1, ell + 1))


def enumerate_symplectic(ell: int) -> Iterator[F2Matrix]:
    """Brute-force sweep of all ``2ell x 2ell`` matrices, yielding symplectic ones.

    Only meant for ``ell <= 2`` (65536 candidates at ``ell = 2``).
    """
    if ell > 2:
        raise ValueError("Brute-force symplectic sweep supports ell <= 2")
    size = 2 * ell
    for rows in itertools.product(range(1 << size), repeat=size):
        t = F2Matrix(rows, size)
        if is_symplectic(t, ell):
            yield t
