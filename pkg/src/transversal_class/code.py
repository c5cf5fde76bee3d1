"""Stabilizer codes as isotropic subspaces of F2^(2n).

A code is stored by the canonical RREF basis of its subspace. Signs of
Pauli operators are not tracked.

Example:
    ```python
    from transversal_class.code import parse_code, distance

    code = parse_code("XXXX\\nZZZZ")
    assert (code.n, code.k) == (4, 2)
    assert distance(code) == 2
    ```
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from transversal_class.errors import (
    AnticommutingGeneratorsError,
    DimensionMismatchError,
    DistanceCapError,
    NoLogicalOperatorsError,
    StabParseError,
)
from transversal_class.f2core import F2Matrix, F2Vector, RowSpace
from transversal_class.symplectic import act_pairs, even_mask, omega_bits, swap_pairs

logger = logging.getLogger(__name__)

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}

DEFAULT_DISTANCE_MAX_N = 14


@dataclass(frozen=True)
class PauliString:
    """A Pauli operator up to phase, e.g. ``PauliString("XZZXI")``."""

    letters: str

    def __post_init__(self) -> None:
        for column, ch in enumerate(self.letters, start=1):
            if ch not in _LETTER_BITS:
                raise StabParseError(1, column, f"invalid Pauli letter {ch!r}")

    @property
    def n(self) -> int:
        return len(self.letters)

    def to_bits(self) -> int:
        value = 0
        for i, ch in enumerate(self.letters):
            x, z = _LETTER_BITS[ch]
            value |= (x << (2 * i)) | (z << (2 * i + 1))
        return value

    def to_vector(self) -> F2Vector:
        return F2Vector(2 * self.n, self.to_bits())

    @classmethod
    def from_bits(cls, bits: int, n: int) -> PauliString:
        pairs = (((bits >> (2 * i)) & 1, (bits >> (2 * i + 1)) & 1) for i in range(n))
        return cls("".join(_BITS_LETTER[pair] for pair in pairs))

    @classmethod
    def from_vector(cls, v: F2Vector) -> PauliString:
        if v.length % 2:
            raise DimensionMismatchError("PauliString.from_vector", v.length, "even length")
        return cls.from_bits(v.bits, v.length // 2)

    @property
    def weight(self) -> int:
        return sum(1 for ch in self.letters if ch != "I")

    def __str__(self) -> str:
        return self.letters


def qubit_weight(v: int, n: int) -> int:
    """Number of qubits on which the packed vector acts non-trivially."""
    return ((v | (v >> 1)) & even_mask(n)).bit_count()


@dataclass(frozen=True)
class StabilizerCode:
    """An isotropic subspace C of F2^(2n) in interleaved coordinates.

    Raises:
        AnticommutingGeneratorsError: If two basis rows anticommute.
    """

    n: int
    space: RowSpace

    def __post_init__(self) -> None:
        if self.space.ncols != 2 * self.n:
            raise DimensionMismatchError("StabilizerCode", self.space.ncols, 2 * self.n)
        rows = self.space.basis.data
        for i, j in itertools.combinations(range(len(rows)), 2):
            if omega_bits(rows[i], rows[j], self.n):
                raise AnticommutingGeneratorsError(i + 1, j + 1)

    @classmethod
    def from_paulis(cls, paulis: Iterable[str]) -> StabilizerCode:
        return parse_code("\n".join(paulis))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def k(self) -> int:
        return self.n - self.space.dim

    @property
    def basis(self) -> tuple[int, ...]:
        return self.space.basis.data

    def generators(self) -> list[PauliString]:
        return [PauliString.from_bits(row, self.n) for row in self.space.basis.data]

    def __contains__(self, v: F2Vector) -> bool:
        return v in self.space


def parse_code(text: str) -> StabilizerCode:
    """Parse `.stab` text into a validated code.

    One Pauli string per line over ``I X Y Z``; ``#`` starts a comment and blank
    lines are skipped. Dependent generators are reduced away.

    Raises:
        StabParseError: On a bad character, ragged lines or empty input.
        AnticommutingGeneratorsError: If two supplied generators anticommute.
    """
    generators: list[tuple[int, str, int]] = []
    n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        line = body.strip()
        if not line:
            continue
        indent = len(body) - len(body.lstrip())
        for column, ch in enumerate(line, start=indent + 1):
            if ch not in _LETTER_BITS:
                raise StabParseError(lineno, column, f"invalid Pauli letter {ch!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise StabParseError(lineno, None, f"expected {n} qubits, got {len(line)}")
        generators.append((lineno, line, PauliString(line).to_bits()))
    if n is None:
        raise StabParseError(1, None, "no generators found")
    for (la, pa, va), (lb, pb, vb) in itertools.combinations(generators, 2):
        if omega_bits(va, vb, n):
            raise AnticommutingGeneratorsError(la, lb, pa, pb)
    space = RowSpace.from_bit_rows((v for _, _, v in generators), 2 * n)
    logger.debug("Parsed %d generators on %d qubits, rank %d", len(generators), n, space.dim)
    return StabilizerCode(n, space)


def read_code(path: str) -> StabilizerCode:
    """Read and parse a `.stab` file."""
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def render(code: StabilizerCode) -> str:
    """Render the canonical basis back to `.stab` text."""
    if code.dim == 0:
        return "I" * code.n
    return "\n".join(str(p) for p in code.generators())


def dual(code: StabilizerCode) -> RowSpace:
    """The omega-orthogonal complement of C, of dimension ``2n - dim C``."""
    swapped = RowSpace.from_bit_rows(
        (swap_pairs(row, code.n) for row in code.basis), 2 * code.n
    )
    return swapped.orthogonal_complement()


def distance(code: StabilizerCode, max_n: int = DEFAULT_DISTANCE_MAX_N) -> int:
    """Minimum qubit weight of a vector in the dual but not in C.

    Searches supports of increasing size and every Pauli assignment on them.

    Raises:
        NoLogicalOperatorsError: If ``k == 0``.
        DistanceCapError: If ``n > max_n``.
    """
    if code.k == 0:
        raise NoLogicalOperatorsError()
    if code.n > max_n:
        raise DistanceCapError(code.n, max_n)
    n = code.n
    checks = [swap_pairs(row, n) for row in code.basis]
    letters = (1, 2, 3)
    for weight in range(1, n + 1):
        for support in itertools.combinations(range(n), weight):
            for assignment in itertools.product(letters, repeat=weight):
                v = 0
                for q, bits in zip(support, assignment, strict=True):
                    v |= bits << (2 * q)
                if any((v & chk).bit_count() & 1 for chk in checks):
                    continue
                if not code.space.contains_bits(v):
                    logger.debug("Distance %d witnessed by %s", weight, PauliString.from_bits(v, n))
                    return weight
    raise AssertionError("dual strictly contains C when k > 0")


def transform(code: StabilizerCode, r: F2Matrix) -> StabilizerCode:
    """Apply the same single-qubit tableau `r` to every qubit: C -> C . r."""
    if r.shape != (2, 2):
        raise DimensionMismatchError("transform", r.shape, (2, 2))
    rows = [act_pairs(row, r, code.n) for row in code.basis]
    return StabilizerCode(code.n, RowSpace.from_bit_rows(rows, 2 * code.n))


_A1_GENERATOR = F2Matrix.from_rows([[1, 1], [1, 0]])
_A2_GENERATOR = F2Matrix.from_rows([[1, 0], [0, 0]])
_A3_GENERATOR = F2Matrix.from_rows([[0, 1], [1, 0]])
_NILPOTENT = F2Matrix.from_rows([[0, 1], [0, 0]])


def _invariant(code: StabilizerCode, t: F2Matrix) -> bool:
    from transversal_class.endo.algebra import invariant_under

    return invariant_under(code, t)


def is_css(code: StabilizerCode) -> bool:
    """True iff C splits into X-type and Z-type parts."""
    return _invariant(code, _A2_GENERATOR)


def is_self_dual_code(code: StabilizerCode) -> bool:
    """True iff C is invariant under exchanging X and Z."""
    return _invariant(code, _A3_GENERATOR)


def is_gf4_linear(code: StabilizerCode) -> bool:
    """True iff C is invariant under the facet map X -> Y -> Z."""
    return _invariant(code, _A1_GENERATOR)


def is_semi_self_dual(code: StabilizerCode) -> bool:
    """True iff the X part of every stabilizer, read as Z, is again a stabilizer."""
    return _invariant(code, _NILPOTENT)


def random_code(n: int, dim: int, rng: np.random.Generator | int | None = None) -> StabilizerCode:
    """Sample a random isotropic subspace of dimension `dim` on `n` qubits."""
    if not 0 <= dim <= n:
        raise ValueError(f"dim must lie in [0, {n}], got {dim}")
    gen = np.random.default_rng(rng)
    chosen: list[int] = []
    space = RowSpace.zero(2 * n)
    while len(chosen) < dim:
        bits = gen.integers(0, 2, size=2 * n)
        v = F2Vector.from_numpy(bits).bits
        if space.contains_bits(v) or any(omega_bits(v, c, n) for c in chosen):
            continue
        chosen.append(v)
        space = RowSpace.from_bit_rows(chosen, 2 * n)
    return StabilizerCode(n, space)
