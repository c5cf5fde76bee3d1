"""Exact linear algebra over GF(2) on bit-packed rows.

Every row is stored as a Python integer whose bit ``j`` holds column ``j``,
so elimination is word-level XOR. Vectors are row vectors and matrices act on
them by right multiplication throughout the package.

Example:
    ```python
    from transversal_class.f2core import F2Matrix, RowSpace, rref

    m = F2Matrix.from_rows([[1, 1], [0, 1]])
    reduced, rank = rref(m)   # identity, 2
    space = RowSpace.span(m)
    assert space.contains_bits(0b11)
    ```
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from transversal_class.errors import DimensionMismatchError, SingularMatrixError


def parity(x: int) -> int:
    """Return the GF(2) sum of the bits of `x`."""
    return x.bit_count() & 1


def _row_to_text(row: int, ncols: int) -> str:
    return "".join("1" if (row >> j) & 1 else "0" for j in range(ncols))


def _text_to_row(text: str) -> int:
    value = 0
    for j, ch in enumerate(text):
        if ch == "1":
            value |= 1 << j
    return value


def _pack(bits: npt.ArrayLike) -> int:
    arr = np.asarray(bits, dtype=np.int64) % 2
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _unpack(value: int, length: int) -> npt.NDArray[np.uint8]:
    nbytes = max(1, (length + 7) // 8)
    raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].copy()


@dataclass(frozen=True)
class F2Vector:
    """A row vector over GF(2).

    Bits beyond `length` are always zero.
    """

    length: int
    """Number of coordinates."""

    bits: int = 0
    """Packed coordinates, bit ``j`` is coordinate ``j``."""

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("Vector length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"Bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> F2Vector:
        values = [int(b) & 1 for b in bits]
        return cls(len(values), sum(b << j for j, b in enumerate(values)))

    @classmethod
    def from_numpy(cls, array: npt.ArrayLike) -> F2Vector:
        arr = np.asarray(array).reshape(-1)
        return cls(int(arr.shape[0]), _pack(arr))

    def to_numpy(self) -> npt.NDArray[np.uint8]:
        return _unpack(self.bits, self.length)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        return (self.bits >> index) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: F2Vector) -> F2Vector:
        if self.length != other.length:
            raise DimensionMismatchError("vector add", self.length, other.length)
        return F2Vector(self.length, self.bits ^ other.bits)

    def __matmul__(self, other: F2Matrix) -> F2Vector:
        if self.length != other.nrows:
            raise DimensionMismatchError("vector-matrix product", self.length, other.shape)
        return F2Vector(other.ncols, other.apply_bits(self.bits))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        return _row_to_text(self.bits, self.length)


@dataclass(frozen=True, order=False)
class F2Matrix:
    """Dense matrix over GF(2) with row-major packed storage.

    Instances are immutable and hashable, so they can be used as set members
    and dictionary keys.

    Example:
        ```python
        j = F2Matrix.from_rows([[0, 1], [1, 0]])
        assert j @ j == F2Matrix.identity(2)
        ```
    """

    data: tuple[int, ...]
    """Packed rows; bit ``j`` of ``data[i]`` is entry ``(i, j)``."""

    ncols: int
    """Number of columns."""

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ValueError("Column count must be non-negative")
        limit = 1 << self.ncols
        for i, row in enumerate(self.data):
            if row < 0 or row >= limit:
                raise ValueError(f"Row {i} has bits beyond column {self.ncols}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> F2Matrix:
        """Build a matrix from nested lists of 0/1 entries."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatchError("from_rows", f"row {i} of length {len(row)}", ncols)
            packed.append(sum((int(b) & 1) << j for j, b in enumerate(row)))
        return cls(tuple(packed), ncols)

    @classmethod
    def from_bit_rows(cls, rows: Iterable[int], ncols: int) -> F2Matrix:
        return cls(tuple(rows), ncols)

    @classmethod
    def from_text(cls, text: str) -> F2Matrix:
        """Parse whitespace-separated rows of ``0``/``1`` characters."""
        lines = [line.strip() for line in text.split() if line.strip()]
        ncols = len(lines[0]) if lines else 0
        for line in lines:
            if len(line) != ncols or set(line) - {"0", "1"}:
                raise ValueError(f"Invalid matrix row {line!r}")
        return cls(tuple(_text_to_row(line) for line in lines), ncols)

    @classmethod
    def from_numpy(cls, array: npt.ArrayLike) -> F2Matrix:
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ValueError(f"Expected a 2-D array, got shape {arr.shape}")
        return cls(tuple(_pack(row) for row in arr), int(arr.shape[1]))

    @classmethod
    def block_diag(cls, *blocks: F2Matrix) -> F2Matrix:
        rows: list[int] = []
        offset = 0
        for block in blocks:
            rows.extend(row << offset for row in block.data)
            offset += block.ncols
        return cls(tuple(rows), offset)

    @classmethod
    def kron(cls, a: F2Matrix, b: F2Matrix) -> F2Matrix:
        """Kronecker product: block ``(i, j)`` is ``a[i, j] * b``."""
        rows: list[int] = []
        for i in range(a.nrows):
            for brow in b.data:
                acc = 0
                for j in range(a.ncols):
                    if (a.data[i] >> j) & 1:
                        acc |= brow << (j * b.ncols)
                rows.append(acc)
        return cls(tuple(rows), a.ncols * b.ncols)

    # -- accessors ----------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.data), self.ncols)

    def is_square(self) -> bool:
        return len(self.data) == self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not 0 <= j < self.ncols:
            raise IndexError(index)
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> F2Vector:
        return F2Vector(self.ncols, self.data[i])

    def rows(self) -> Iterator[F2Vector]:
        for row in self.data:
            yield F2Vector(self.ncols, row)

    def to_list(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.ncols)] for row in self.data]

    def to_numpy(self) -> npt.NDArray[np.uint8]:
        if not self.data:
            return np.zeros((0, self.ncols), dtype=np.uint8)
        return np.stack([_unpack(row, self.ncols) for row in self.data])

    def to_text(self) -> str:
        return "\n".join(_row_to_text(row, self.ncols) for row in self.data)

    def sort_key(self) -> tuple[str, ...]:
        """Lexicographic key over rows, column 0 most significant."""
        return tuple(_row_to_text(row, self.ncols) for row in self.data)

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic ---------------------------------------------------------

    def apply_bits(self, v: int) -> int:
        """Return ``v @ self`` for a packed row vector `v`."""
        acc = 0
        data = self.data
        while v:
            low = v & -v
            acc ^= data[low.bit_length() - 1]
            v ^= low
        return acc

    def __add__(self, other: F2Matrix) -> F2Matrix:
        return add(self, other)

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        return mul(self, other)

    def transpose(self) -> F2Matrix:
        return transpose(self)

    @property
    def T(self) -> F2Matrix:
        return transpose(self)

    def rank(self) -> int:
        return rref(self)[1]

    def is_zero(self) -> bool:
        return not any(self.data)


def add(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Entrywise XOR."""
    if a.shape != b.shape:
        raise DimensionMismatchError("add", a.shape, b.shape)
    return F2Matrix(tuple(x ^ y for x, y in zip(a.data, b.data, strict=True)), a.ncols)


def mul(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Matrix product over GF(2)."""
    if a.ncols != b.nrows:
        raise DimensionMismatchError("mul", a.shape, b.shape)
    return F2Matrix(tuple(b.apply_bits(row) for row in a.data), b.ncols)


def transpose(m: F2Matrix) -> F2Matrix:
    cols = []
    for j in range(m.ncols):
        acc = 0
        for i, row in enumerate(m.data):
            if (row >> j) & 1:
                acc |= 1 << i
        cols.append(acc)
    return F2Matrix(tuple(cols), m.nrows)


def _eliminate(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduce `rows` in place to RREF, returning ``(rows, pivot_columns)``."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        bit = 1 << col
        for i in range(r, nrows):
            if rows[i] & bit:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        pivot_row = rows[r]
        for k in range(nrows):
            if k != r and rows[k] & bit:
                rows[k] ^= pivot_row
        pivots.append(col)
        r += 1
    return rows, pivots


def rref(m: F2Matrix) -> tuple[F2Matrix, int]:
    """Return the reduced row-echelon form of `m` and its rank.

    The result keeps the shape of `m`; zero rows collect at the bottom.
    """
    rows, pivots = _eliminate(list(m.data), m.ncols)
    return F2Matrix(tuple(rows), m.ncols), len(pivots)


def rank(m: F2Matrix) -> int:
    return rref(m)[1]


def invert(m: F2Matrix) -> F2Matrix:
    """Return the inverse of a square matrix.

    Raises:
        DimensionMismatchError: If `m` is not square.
        SingularMatrixError: If `m` has rank below its size.
    """
    if not m.is_square():
        raise DimensionMismatchError("invert", m.shape, "square")
    n = m.ncols
    augmented = [row | (1 << (n + i)) for i, row in enumerate(m.data)]
    rows, pivots = _eliminate(augmented, 2 * n)
    rank_left = sum(1 for p in pivots if p < n)
    if rank_left < n:
        raise SingularMatrixError(n, rank_left)
    return F2Matrix(tuple(row >> n for row in rows), n)


@dataclass(frozen=True)
class RowSpace:
    """A subspace of GF(2)^cols, stored by its canonical RREF basis.

    Two subspaces are equal exactly when their bases are equal bit-for-bit.
    """

    basis: F2Matrix
    """RREF basis with no zero rows."""

    _pivots: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pivots = []
        for row in self.basis.data:
            if row == 0:
                raise ValueError("RowSpace basis rows must be nonzero")
            pivots.append((row & -row).bit_length() - 1)
        if any(a >= b for a, b in zip(pivots, pivots[1:], strict=False)):
            raise ValueError("RowSpace basis must be in reduced row-echelon form")
        object.__setattr__(self, "_pivots", tuple(pivots))

    @classmethod
    def span(cls, generators: F2Matrix) -> RowSpace:
        rows, pivots = _eliminate(list(generators.data), generators.ncols)
        return cls(F2Matrix(tuple(rows[: len(pivots)]), generators.ncols))

    @classmethod
    def from_bit_rows(cls, rows: Iterable[int], ncols: int) -> RowSpace:
        return cls.span(F2Matrix(tuple(rows), ncols))

    @classmethod
    def zero(cls, ncols: int) -> RowSpace:
        return cls(F2Matrix((), ncols))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def ncols(self) -> int:
        return self.basis.ncols

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def reduce_bits(self, v: int) -> int:
        """Return the residue of `v` modulo the subspace."""
        for row, p in zip(self.basis.data, self._pivots, strict=True):
            if (v >> p) & 1:
                v ^= row
        return v

    def contains_bits(self, v: int) -> bool:
        return self.reduce_bits(v) == 0

    def __contains__(self, v: F2Vector) -> bool:
        return member(v, self)

    def elements(self) -> Iterator[int]:
        """Yield every vector of the subspace as packed bits (Gray-code order)."""
        basis = self.basis.data
        v = 0
        yield v
        for step in range(1, 1 << len(basis)):
            v ^= basis[(step & -step).bit_length() - 1]
            yield v

    def issubset(self, other: RowSpace) -> bool:
        return self.ncols == other.ncols and all(
            other.contains_bits(row) for row in self.basis.data
        )

    def orthogonal_complement(self) -> RowSpace:
        """Return ``{x : x . b = 0 for every basis row b}`` under the dot product."""
        pivot_set = set(self._pivots)
        vectors = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = 1 << free
            for row, p in zip(self.basis.data, self._pivots, strict=True):
                if (row >> free) & 1:
                    v |= 1 << p
            vectors.append(v)
        return RowSpace.from_bit_rows(vectors, self.ncols)


def member(v: F2Vector, s: RowSpace) -> bool:
    """Return True iff `v` lies in the span of `s`.

    Raises:
        DimensionMismatchError: If the lengths differ.
    """
    if v.length != s.ncols:
        raise DimensionMismatchError("member", v.length, s.ncols)
    return s.contains_bits(v.bits)
