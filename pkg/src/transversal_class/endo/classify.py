"""Six-family classification of stabilizer codes with a local Clifford witness."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from transversal_class.code import StabilizerCode, transform
from transversal_class.endo.algebra import EndoAlgebra, conjugate_algebra, endo_algebra
from transversal_class.endo.catalog import CANONICAL_BY_CASE
from transversal_class.f2core import F2Matrix
from transversal_class.symplectic import sp2_elements

logger = logging.getLogger(__name__)

FAMILY_NAMES: dict[int, str] = {
    0: "self-dual CSS",
    1: "GF(4)",
    2: "CSS",
    3: "self-dual",
    4: "semi-self-dual CSS / self-dual semi-CSS",
    5: "generic",
}
"""Human-readable family names keyed by case."""

GROUP_NAMES: dict[int, str] = {
    0: "Sp(2l,F2)",
    1: "U(l,F4)",
    2: "GL(l,F2)",
    3: "O(l,F2[x]/(x^2))",
    4: "U(l,R8)",
    5: "O(l,F2)",
}
"""Transversal group of each family, with l the number of code blocks."""


def family_name(case: int) -> str:
    return FAMILY_NAMES[case]


def group_name(case: int, ell: int | None = None) -> str:
    name = GROUP_NAMES[case]
    if ell is None:
        return name
    return name.replace("2l", str(2 * ell)).replace("(l,", f"({ell},")


@dataclass(frozen=True)
class CodeFamily:
    """Classification outcome.

    Conjugating `algebra` by `witness` gives exactly the canonical algebra of
    `case`, and `canonical_code` is ``C . witness``.
    """

    case: int
    witness: F2Matrix
    canonical_code: StabilizerCode
    algebra: EndoAlgebra

    @property
    def tag(self) -> str:
        return self.algebra.tag

    @property
    def name(self) -> str:
        return FAMILY_NAMES[self.case]


def family_case(algebra: EndoAlgebra) -> int:
    return algebra.entry.case


def find_witness(algebra: EndoAlgebra) -> F2Matrix:
    """First element of Sp(2, F2) conjugating `algebra` onto its canonical form."""
    target = CANONICAL_BY_CASE[family_case(algebra)].mask
    for r in sp2_elements():
        if conjugate_algebra(algebra, r).mask == target:
            return r
    raise AssertionError(f"catalog algebra {algebra.tag} has no witness")


def classify(code: StabilizerCode) -> CodeFamily:
    """Classify `code` into one of the six families.

    Example:
        ```python
        from transversal_class import classify, get_code

        family = classify(get_code("513"))
        assert family.case == 1 and family.tag == "A1"
        ```
    """
    algebra = endo_algebra(code)
    case = family_case(algebra)
    witness = find_witness(algebra)
    logger.debug("Algebra %s -> case %d, witness %s", algebra.tag, case, witness.sort_key())
    return CodeFamily(case, witness, transform(code, witness), algebra)
