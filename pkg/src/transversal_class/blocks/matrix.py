"""Tableaus on l code blocks viewed as l x l matrices of 2x2 blocks.

Block ``(i, j)`` occupies rows ``2i, 2i + 1`` and columns ``2j, 2j + 1``;
positions are 0-based.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from transversal_class.code import StabilizerCode
from transversal_class.endo.algebra import EndoAlgebra, bar_code, code_matrix
from transversal_class.errors import DimensionMismatchError, TableauParseError
from transversal_class.f2core import F2Matrix, F2Vector
from transversal_class.symplectic import j_matrix


@dataclass(frozen=True)
class BlockMatrix:
    """A ``2l x 2l`` matrix over F2 with its 2x2 block structure.

    Example:
        ```python
        cnot = BlockMatrix.from_text("1010\\n0100\\n0010\\n0101")
        assert cnot.block(0, 1) == F2Matrix.from_rows([[1, 0], [0, 0]])
        ```
    """

    ell: int
    t: F2Matrix

    def __post_init__(self) -> None:
        size = 2 * self.ell
        if self.ell < 1 or self.t.shape != (size, size):
            raise DimensionMismatchError("BlockMatrix", self.t.shape, (size, size))

    @classmethod
    def of(cls, t: F2Matrix) -> BlockMatrix:
        """Wrap a square matrix of even size."""
        if not t.is_square() or t.ncols % 2 or t.ncols == 0:
            raise DimensionMismatchError("BlockMatrix.of", t.shape, "square of even size")
        return cls(t.ncols // 2, t)

    @classmethod
    def identity(cls, ell: int) -> BlockMatrix:
        return cls(ell, F2Matrix.identity(2 * ell))

    @classmethod
    def from_block_codes(cls, codes: Sequence[Sequence[int]]) -> BlockMatrix:
        """Build from an l x l grid of 4-bit block codes."""
        ell = len(codes)
        rows: list[int] = []
        for i in range(ell):
            if len(codes[i]) != ell:
                raise DimensionMismatchError("from_block_codes", len(codes[i]), ell)
            top = bottom = 0
            for j, c in enumerate(codes[i]):
                top |= (c & 0b11) << (2 * j)
                bottom |= (c >> 2) << (2 * j)
            rows.extend((top, bottom))
        return cls(ell, F2Matrix(tuple(rows), 2 * ell))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[F2Matrix]]) -> BlockMatrix:
        return cls.from_block_codes(
            [[b.data[0] | (b.data[1] << 2) for b in row] for row in blocks]
        )

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> BlockMatrix:
        """Block ``(i, perm[i])`` is I and all others are zero."""
        ell = len(perm)
        identity = 0b1001
        return cls.from_block_codes(
            [[identity if perm[i] == j else 0 for j in range(ell)] for i in range(ell)]
        )

    @classmethod
    def block_diagonal(cls, blocks: Sequence[F2Matrix]) -> BlockMatrix:
        return cls(len(blocks), F2Matrix.block_diag(*blocks))

    @classmethod
    def from_text(cls, text: str) -> BlockMatrix:
        """Parse a tableau file: 2l lines of 2l characters over ``0``/``1``.

        Raises:
            TableauParseError: On bad characters, ragged or odd-sized input.
        """
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if not lines:
            raise TableauParseError(None, "empty tableau")
        size = len(lines)
        if size % 2:
            raise TableauParseError(None, f"dimension {size} is odd")
        for lineno, line in enumerate(lines, start=1):
            if len(line) != size:
                raise TableauParseError(lineno, f"expected {size} entries, got {len(line)}")
            if set(line) - {"0", "1"}:
                raise TableauParseError(lineno, "entries must be 0 or 1")
        return cls(size // 2, F2Matrix.from_text("\n".join(lines)))

    def to_text(self) -> str:
        return self.t.to_text()

    def block_code(self, i: int, j: int) -> int:
        top = (self.t.data[2 * i] >> (2 * j)) & 0b11
        bottom = (self.t.data[2 * i + 1] >> (2 * j)) & 0b11
        return top | (bottom << 2)

    def block(self, i: int, j: int) -> F2Matrix:
        return code_matrix(self.block_code(i, j))

    def block_codes(self) -> list[list[int]]:
        return [[self.block_code(i, j) for j in range(self.ell)] for i in range(self.ell)]

    def support(self) -> set[tuple[int, int]]:
        """Positions of nonzero blocks."""
        return {
            (i, j)
            for i in range(self.ell)
            for j in range(self.ell)
            if self.block_code(i, j)
        }

    def has_permutation_support(self) -> bool:
        """True iff every block row and block column holds exactly one nonzero block."""
        support = self.support()
        rows = [i for i, _ in support]
        cols = [j for _, j in support]
        return len(support) == self.ell and len(set(rows)) == len(set(cols)) == self.ell

    def __matmul__(self, other: BlockMatrix) -> BlockMatrix:
        if self.ell != other.ell:
            raise DimensionMismatchError("BlockMatrix product", self.ell, other.ell)
        return BlockMatrix(self.ell, self.t @ other.t)

    def sort_key(self) -> tuple[str, ...]:
        return self.t.sort_key()

    def __str__(self) -> str:
        return self.to_text()


def block_permutations(ell: int) -> Iterator[BlockMatrix]:
    """All l! block permutation tableaus."""
    for perm in itertools.permutations(range(ell)):
        yield BlockMatrix.permutation(perm)


def act_blocks(v: F2Vector, t: BlockMatrix) -> F2Vector:
    """Apply `t` to each physical qubit of `v` in qubit-major layout.

    Qubit ``q`` owns the contiguous slice of its l (x, z) pairs across blocks.

    Raises:
        DimensionMismatchError: If the length is not a multiple of ``2l``.
    """
    width = 2 * t.ell
    if v.length % width:
        raise DimensionMismatchError("act_blocks", v.length, f"multiple of {width}")
    mask = (1 << width) - 1
    out = 0
    for q in range(v.length // width):
        piece = (v.bits >> (q * width)) & mask
        out |= t.t.apply_bits(piece) << (q * width)
    return F2Vector(v.length, out)


def interleave_blocks(vectors: Sequence[int], n: int) -> int:
    """Pack one vector per block into qubit-major layout."""
    ell = len(vectors)
    out = 0
    for q in range(n):
        for b, vec in enumerate(vectors):
            pair = (vec >> (2 * q)) & 0b11
            out |= pair << (2 * (q * ell + b))
    return out


def split_blocks(v: int, n: int, ell: int) -> list[int]:
    """Inverse of `interleave_blocks`."""
    blocks = [0] * ell
    for q in range(n):
        for b in range(ell):
            pair = (v >> (2 * (q * ell + b))) & 0b11
            blocks[b] |= pair << (2 * q)
    return blocks


def in_Ml_A(t: BlockMatrix, algebra: EndoAlgebra) -> bool:
    """True iff every block of `t` lies in `algebra`."""
    mask = algebra.mask
    return all(
        (mask >> t.block_code(i, j)) & 1 for i in range(t.ell) for j in range(t.ell)
    )


def preserves_l_blocks(code: StabilizerCode, t: BlockMatrix) -> bool:
    """Check directly that ``t`` maps l copies of C into themselves.

    Each basis vector of C is placed in every block position, acted on, and
    every resulting block is tested for membership in C.
    """
    n, ell = code.n, t.ell
    for row in code.basis:
        for position in range(ell):
            placed = [row if b == position else 0 for b in range(ell)]
            v = F2Vector(2 * n * ell, interleave_blocks(placed, n))
            image = act_blocks(v, t).bits
            if not all(code.space.contains_bits(b) for b in split_blocks(image, n, ell)):
                return False
    return True


def bar(a: F2Matrix) -> F2Matrix:
    """Return ``J a^t J``."""
    if a.shape != (2, 2):
        raise DimensionMismatchError("bar", a.shape, (2, 2))
    j = j_matrix(1)
    return j @ a.T @ j


def bar_transpose(t: BlockMatrix) -> BlockMatrix:
    """Block ``(j, k)`` of the result is ``bar`` of block ``(k, j)`` of `t`."""
    codes = t.block_codes()
    return BlockMatrix.from_block_codes(
        [[bar_code(codes[k][j]) for k in range(t.ell)] for j in range(t.ell)]
    )


def is_unitary_over_A(t: BlockMatrix) -> bool:
    """True iff ``t . bar_transpose(t)`` is the identity."""
    return (t.t @ bar_transpose(t).t) == F2Matrix.identity(2 * t.ell)
