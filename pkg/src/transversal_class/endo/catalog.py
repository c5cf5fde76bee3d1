"""The subalgebras of M2(F2) that occur as endomorphism algebras of codes.

Every 2x2 matrix ``[[a, b], [c, d]]`` is encoded as the 4-bit integer
``a | b << 1 | c << 2 | d << 3``; an algebra is a 16-bit mask over those codes.
"""

from __future__ import annotations

from dataclasses import dataclass

from transversal_class.types import AlgebraTag, FamilyCase

ZERO = 0b0000
IDENTITY = 0b1001
HADAMARD = 0b0110
FACET = 0b0111  # [[1, 1], [1, 0]]
FACET_INV = 0b1110  # [[0, 1], [1, 1]]
ALL_ONES = 0b1111


def mask_of(*codes: int) -> int:
    mask = 0
    for c in codes:
        mask |= 1 << c
    return mask


@dataclass(frozen=True)
class AlgebraEntry:
    """A named element set in the catalog."""

    tag: AlgebraTag
    mask: int
    ring: str
    case: FamilyCase
    description: str


# =============================================================================
# Canonical representatives, one per family
# =============================================================================

A0 = AlgebraEntry("A0", 0xFFFF, "M2(F2)", 0, "all sixteen matrices")
A1 = AlgebraEntry("A1", mask_of(ZERO, IDENTITY, FACET, FACET_INV), "F4", 1, "facet field")
A2 = AlgebraEntry(
    "A2", mask_of(ZERO, IDENTITY, 0b0001, 0b1000), "F2 x F2", 2, "diagonal projectors"
)
A3 = AlgebraEntry(
    "A3", mask_of(ZERO, IDENTITY, HADAMARD, ALL_ONES), "F2[x]/(x^2)", 3, "generated by J"
)
A4 = AlgebraEntry(
    "A4",
    mask_of(*(c for c in range(16) if not c & 0b0100)),
    "R8",
    4,
    "upper-triangular matrices",
)
A5 = AlgebraEntry("A5", mask_of(ZERO, IDENTITY), "F2", 5, "scalars only")

# =============================================================================
# Conjugates of the canonical representatives
# =============================================================================

B0 = AlgebraEntry("B0", mask_of(ZERO, IDENTITY, 0b0011, 0b1010), "F2 x F2", 2, "row projectors")
B1 = AlgebraEntry("B1", mask_of(ZERO, IDENTITY, 0b1100, 0b0101), "F2 x F2", 2, "column projectors")
B2 = AlgebraEntry(
    "B2", mask_of(ZERO, IDENTITY, 0b1011, 0b0010), "F2[x]/(x^2)", 3, "upper nilpotent"
)
B3 = AlgebraEntry(
    "B3", mask_of(ZERO, IDENTITY, 0b1101, 0b0100), "F2[x]/(x^2)", 3, "lower nilpotent"
)
L = AlgebraEntry(
    "L",
    mask_of(*(c for c in range(16) if not c & 0b0010)),
    "R8",
    4,
    "lower-triangular matrices",
)
E = AlgebraEntry(
    "E",
    mask_of(*(c for c in range(16) if c.bit_count() % 2 == 0)),
    "R8",
    4,
    "matrices with an even number of ones",
)

BUILTIN_ALGEBRAS: dict[str, AlgebraEntry] = {
    entry.tag: entry for entry in (A0, A1, A2, A3, A4, A5, B0, B1, B2, B3, L, E)
}
"""All twelve catalog algebras keyed by tag."""

CANONICAL_BY_CASE: dict[int, AlgebraEntry] = {0: A0, 1: A1, 2: A2, 3: A3, 4: A4, 5: A5}

_BY_MASK = {entry.mask: entry for entry in BUILTIN_ALGEBRAS.values()}


def get_algebra(tag: str) -> AlgebraEntry:
    """Get a catalog algebra by tag.

    Raises:
        KeyError: If the tag is not in the catalog.
    """
    if tag not in BUILTIN_ALGEBRAS:
        available = ", ".join(BUILTIN_ALGEBRAS)
        raise KeyError(f"Unknown algebra '{tag}'. Available: {available}")
    return BUILTIN_ALGEBRAS[tag]


def lookup_mask(mask: int) -> AlgebraEntry | None:
    return _BY_MASK.get(mask)
