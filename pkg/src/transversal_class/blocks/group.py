"""Enumeration and counting of transversal Clifford groups on l code blocks.

The group for a code with endomorphism algebra A is the set of symplectic
``2l x 2l`` tableaus whose 2x2 blocks all lie in A. It is built block row by
block row. A block row ``(x, z)`` is packed as ``x | z << 2l`` and ranges over
the linear space A^l; every earlier row imposes four linear orthogonality
constraints and the row itself must satisfy ``omega(x, z) = 1``.
"""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from transversal_class.blocks.matrix import BlockMatrix
from transversal_class.code import StabilizerCode
from transversal_class.endo.algebra import EndoAlgebra, endo_algebra
from transversal_class.endo.catalog import CANONICAL_BY_CASE
from transversal_class.endo.classify import group_name
from transversal_class.errors import CapExceededError, OrderUnavailableError
from transversal_class.f2core import F2Matrix, RowSpace, parity
from transversal_class.symplectic import sp_order, swap_pairs
from transversal_class.types import EnumerationSettings

logger = logging.getLogger(__name__)

FAMILY_TABLE: dict[int, dict[int, int]] = {
    0: {1: 6, 2: 720, 3: 1451520, 4: 47377612800},
    1: {1: 3, 2: 18, 3: 648, 4: 77760, 5: 41057280, 6: 82771476480},
    2: {1: 1, 2: 6, 3: 168, 4: 20160, 5: 9999360, 6: 20158709760},
    3: {1: 2, 2: 16, 3: 384, 4: 24576},
    4: {1: 2, 2: 48, 3: 10752},
    5: {1: 1, 2: 2, 3: 6, 4: 48, 5: 720, 6: 23040},
}
"""Published group orders per family case and number of blocks."""

TABLE_ERRATA: dict[tuple[int, int], int] = {(3, 4): 49152}
"""Verified orders where the published table is wrong, keyed by ``(case, l)``.

O(4, F2[x]/(x^2)) has |O(4, F2)| * 2^10 = 49152 elements, found both by block
search and by counting orthonormal frames over the ring directly.
"""


def gl_order(ell: int) -> int:
    """Order of GL(l, F2)."""
    return math.prod(2**ell - 2**i for i in range(ell))


def unitary_f4_order(ell: int) -> int:
    """Order of the unitary group U(l, F4)."""
    return 2 ** (ell * (ell - 1) // 2) * math.prod(2**i - (-1) ** i for i in range(1, ell + 1))


def order_formula(case: int, ell: int) -> int | None:
    """Closed-form order for the families that have one, else None."""
    if case == 0:
        return sp_order(ell)
    if case == 1:
        return unitary_f4_order(ell)
    if case == 2:
        return gl_order(ell)
    return None


def verified_order(case: int, ell: int) -> int | None:
    """Tabulated order with known errata corrected, or None if not tabulated."""
    if (case, ell) in TABLE_ERRATA:
        return TABLE_ERRATA[case, ell]
    return FAMILY_TABLE.get(case, {}).get(ell)


def predicted_order(case: int, ell: int) -> int | None:
    formula = order_formula(case, ell)
    if formula is not None:
        return formula
    return verified_order(case, ell)


@dataclass(frozen=True)
class TransversalGroup:
    """An enumerated or counted group of transversal tableaus."""

    ell: int
    family_case: int
    order: int
    elements: tuple[BlockMatrix, ...] | None = None
    algebra_tag: str = ""

    @property
    def name(self) -> str:
        return group_name(self.family_case, self.ell)

    def __contains__(self, t: BlockMatrix) -> bool:
        if self.elements is None:
            raise ValueError("Group was counted, not enumerated")
        return t in set(self.elements)

    def __iter__(self) -> Iterator[BlockMatrix]:
        return iter(self.elements or ())

    def to_text(self) -> str:
        """Dump elements as tableaus separated by blank lines."""
        return "\n\n".join(t.to_text() for t in self.elements or ()) + "\n"


# -- search space -------------------------------------------------------------


def _row_basis(algebra: EndoAlgebra, ell: int) -> list[int]:
    """Basis of A^l as packed block rows."""
    local = RowSpace.from_bit_rows(algebra.codes, 4).basis.data
    width = 2 * ell
    basis = []
    for k in range(ell):
        for c in local:
            basis.append(((c & 0b11) << (2 * k)) | ((c >> 2) << (width + 2 * k)))
    return basis


def _restrict(basis: list[int], mask: int) -> list[int]:
    """Basis of ``{u in span(basis) : parity(u & mask) = 0}``."""
    pivot = None
    out = []
    for b in basis:
        if parity(b & mask):
            if pivot is None:
                pivot = b
                continue
            b ^= pivot
        out.append(b)
    return out


def _span(basis: Sequence[int]) -> Iterator[int]:
    v = 0
    yield v
    for step in range(1, 1 << len(basis)):
        v ^= basis[(step & -step).bit_length() - 1]
        yield v


def _constraints(u: int, ell: int) -> tuple[int, int, int, int]:
    width = 2 * ell
    low = (1 << width) - 1
    sx = swap_pairs(u & low, ell)
    sz = swap_pairs(u >> width, ell)
    return sx, sz, sx << width, sz << width


def _is_normal(u: int, ell: int) -> bool:
    width = 2 * ell
    x = u & ((1 << width) - 1)
    return parity(x & swap_pairs(u >> width, ell)) == 1


def _first_rows(basis: list[int], ell: int) -> list[int]:
    return [u for u in _span(basis) if _is_normal(u, ell)]


class _Search:
    """Depth-first search state owned by one worker."""

    def __init__(self, ell: int, count_only: bool, node_cap: int, element_cap: int):
        self.ell = ell
        self.count_only = count_only
        self.node_cap = node_cap
        self.element_cap = element_cap
        self.nodes = 0
        self.count = 0
        self.found: list[tuple[int, ...]] = []

    def run(self, basis: list[int], first_rows: Sequence[int]) -> None:
        for u in first_rows:
            self._descend(self._restrict_all(basis, u), [u])

    def _restrict_all(self, basis: list[int], u: int) -> list[int]:
        for m in _constraints(u, self.ell):
            basis = _restrict(basis, m)
        return basis

    def _descend(self, basis: list[int], prefix: list[int]) -> None:
        ell = self.ell
        if len(prefix) == ell:
            self.count += 1
            if not self.count_only:
                if self.count > self.element_cap:
                    raise CapExceededError(self.element_cap)
                self.found.append(tuple(prefix))
            return
        last = len(prefix) == ell - 1
        for u in _span(basis):
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise CapExceededError(self.node_cap)
            if not _is_normal(u, ell):
                continue
            if last and self.count_only:
                self.count += 1
                continue
            prefix.append(u)
            self._descend(self._restrict_all(basis, u), prefix)
            prefix.pop()


def _run_chunk(
    basis: list[int],
    first_rows: list[int],
    ell: int,
    count_only: bool,
    node_cap: int,
    element_cap: int,
) -> tuple[int, list[tuple[int, ...]], int]:
    search = _Search(ell, count_only, node_cap, element_cap)
    search.run(basis, first_rows)
    return search.count, search.found, search.nodes


def _rows_to_block(rows: tuple[int, ...], ell: int) -> BlockMatrix:
    width = 2 * ell
    low = (1 << width) - 1
    data: list[int] = []
    for u in rows:
        data.extend((u & low, u >> width))
    return BlockMatrix(ell, F2Matrix(tuple(data), width))


def _search(
    algebra: EndoAlgebra,
    ell: int,
    *,
    count_only: bool,
    settings: EnumerationSettings,
) -> tuple[int, list[tuple[int, ...]]]:
    basis = _row_basis(algebra, ell)
    first = _first_rows(basis, ell)
    workers = max(1, min(settings.workers, len(first)))
    if ell == 1:
        return len(first), [] if count_only else [(u,) for u in first]
    if workers == 1:
        count, found, nodes = _run_chunk(
            basis, first, ell, count_only, settings.node_cap, settings.cap
        )
        logger.debug("Visited %d search nodes", nodes)
        return count, found
    chunks = [first[i::workers] for i in range(workers)]
    total = 0
    merged: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_run_chunk, basis, chunk, ell, count_only, settings.node_cap, settings.cap)
            for chunk in chunks
        ]
        for future in futures:
            count, found, nodes = future.result()
            logger.debug("Worker visited %d search nodes", nodes)
            total += count
            merged.extend(found)
    if not count_only and total > settings.cap:
        raise CapExceededError(settings.cap)
    return total, merged


def enumerate_algebra_group(
    algebra: EndoAlgebra,
    ell: int,
    settings: EnumerationSettings | None = None,
) -> TransversalGroup:
    """List every symplectic tableau with all blocks in `algebra`.

    Raises:
        CapExceededError: If the order exceeds ``settings.cap``.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    settings = settings or EnumerationSettings()
    case = algebra.entry.case
    predicted = predicted_order(case, ell)
    if predicted is not None and predicted > settings.cap:
        raise CapExceededError(settings.cap, predicted)
    start = time.perf_counter()
    try:
        count, rows = _search(algebra, ell, count_only=False, settings=settings)
    except CapExceededError as exc:
        raise CapExceededError(settings.cap, predicted) from exc
    elements = sorted((_rows_to_block(r, ell) for r in rows), key=BlockMatrix.sort_key)
    logger.info(
        "Enumerated %d elements of %s (algebra %s) in %.2fs",
        count,
        group_name(case, ell),
        algebra.tag,
        time.perf_counter() - start,
    )
    return TransversalGroup(ell, case, count, tuple(elements), algebra.tag)


def enumerate_group(
    code: StabilizerCode,
    ell: int,
    cap: int | None = None,
    settings: EnumerationSettings | None = None,
) -> TransversalGroup:
    """Enumerate the transversal Clifford group of `code` on `ell` blocks.

    Only the endomorphism algebra of the code is consulted, never its length.

    Example:
        ```python
        group = enumerate_group(get_code("513"), 2)
        assert group.order == 18
        ```
    """
    settings = settings or EnumerationSettings()
    if cap is not None:
        settings = settings.model_copy(update={"cap": cap})
    return enumerate_algebra_group(endo_algebra(code), ell, settings)


def count_algebra_group(
    algebra: EndoAlgebra,
    ell: int,
    settings: EnumerationSettings | None = None,
) -> int:
    """Count the group by search without storing elements."""
    settings = settings or EnumerationSettings()
    start = time.perf_counter()
    count, _ = _search(algebra, ell, count_only=True, settings=settings)
    elapsed = time.perf_counter() - start
    logger.info("Counted %d elements (algebra %s) in %.2fs", count, algebra.tag, elapsed)
    return count


def count_group(
    family_case: int,
    ell: int,
    settings: EnumerationSettings | None = None,
    *,
    method: str = "auto",
) -> int:
    """Order of the transversal group of family `family_case` on `ell` blocks.

    ``method`` is ``"enumerate"``, ``"formula"`` or ``"auto"``. Auto counts by
    search when the order is known to fit under ``settings.cap`` or no
    formula exists, and otherwise uses the closed formula.

    Raises:
        OrderUnavailableError: If search is infeasible and there is no formula.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if family_case not in CANONICAL_BY_CASE:
        raise ValueError(f"Unknown family case {family_case}")
    settings = settings or EnumerationSettings()
    formula = order_formula(family_case, ell)
    if method == "formula":
        if formula is None:
            raise OrderUnavailableError(family_case, ell)
        return formula
    if method == "auto" and formula is not None and formula > settings.cap:
        return formula
    algebra = EndoAlgebra(CANONICAL_BY_CASE[family_case].mask)
    try:
        return count_algebra_group(algebra, ell, settings)
    except CapExceededError:
        if formula is not None:
            return formula
        raise OrderUnavailableError(family_case, ell) from None
