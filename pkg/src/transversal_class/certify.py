"""Gate certification and named transversal tableaus."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from transversal_class.blocks.group import enumerate_group
from transversal_class.blocks.matrix import BlockMatrix, block_permutations
from transversal_class.code import StabilizerCode
from transversal_class.endo.algebra import endo_algebra
from transversal_class.endo.classify import classify, group_name
from transversal_class.errors import NotGenericCodeError
from transversal_class.f2core import F2Matrix, invert
from transversal_class.symplectic import is_symplectic
from transversal_class.types import (
    Accepted,
    BlockOutsideAlgebra,
    EnumerationSettings,
    GateVerdict,
    NotSymplectic,
)

logger = logging.getLogger(__name__)

_X_PROJECTOR = 0b1000  # [[0, 0], [0, 1]]
_COMPLEMENT = 0b0001  # I + x = [[1, 0], [0, 0]]


def _tableau(*rows: str) -> BlockMatrix:
    return BlockMatrix.from_text("\n".join(rows))


def certify_gate(code: StabilizerCode, t: BlockMatrix | F2Matrix) -> GateVerdict:
    """Decide whether `t` is a transversal Clifford gate for `code`.

    The gate is transversal iff every block lies in the endomorphism algebra
    and `t` is symplectic. A rejection names the first offending block in
    row-major order, or the failed symplectic check.

    Example:
        ```python
        verdict = certify_gate(get_code("513"), named_tableaus()["cnot"])
        assert not verdict.transversal
        assert verdict.reason.position == (0, 1)
        ```
    """
    if isinstance(t, F2Matrix):
        t = BlockMatrix.of(t)
    algebra = endo_algebra(code)
    for i in range(t.ell):
        for j in range(t.ell):
            block_code = t.block_code(i, j)
            if not algebra.contains_code(block_code):
                logger.debug("Block (%d, %d) lies outside algebra %s", i, j, algebra.tag)
                return GateVerdict(
                    False,
                    BlockOutsideAlgebra((i, j), t.block(i, j), algebra.tag, algebra.elements),
                )
    if not is_symplectic(t.t, t.ell):
        return GateVerdict(False, NotSymplectic())
    case = algebra.entry.case
    return GateVerdict(True, Accepted(algebra.tag, group_name(case, t.ell)))


def cnot_tableau_from_gl(a: F2Matrix) -> BlockMatrix:
    """Tableau of the CNOT circuit realising the invertible matrix `a`.

    Block ``(i, j)`` is ``a_ij x + b_ij (I + x)`` with ``x = [[0, 0], [0, 1]]``
    and ``b = (a^-1)^t``.

    Raises:
        SingularMatrixError: If `a` is not invertible.
    """
    b = invert(a).T
    ell = a.nrows
    codes = [
        [
            (_X_PROJECTOR if a[i, j] else 0) ^ (_COMPLEMENT if b[i, j] else 0)
            for j in range(ell)
        ]
        for i in range(ell)
    ]
    return BlockMatrix.from_block_codes(codes)


def _gottesman4() -> BlockMatrix:
    pattern = ((1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1))
    return BlockMatrix.from_block_codes([[0b1001 if e else 0 for e in row] for row in pattern])


def named_tableaus() -> dict[str, BlockMatrix]:
    """Tableaus of well-known Clifford gates, keyed by name."""
    return {
        "cnot": _tableau("1010", "0100", "0010", "0101"),
        "ycy": _tableau("1011", "0111", "1110", "1101"),
        "cz": _tableau("1001", "0100", "0110", "0001"),
        "cy": _tableau("1011", "0100", "0110", "0101"),
        "gottesman4": _gottesman4(),
        "swap_2": BlockMatrix.permutation((1, 0)),
        "cycle_3": BlockMatrix.permutation((1, 2, 0)),
        "facet": _tableau("11", "10"),
        "facet_inv": _tableau("01", "11"),
        "hadamard": _tableau("01", "10"),
        "sqrt_x": _tableau("10", "11"),
    }


def get_tableau(name: str) -> BlockMatrix:
    """Get a named tableau.

    Raises:
        KeyError: If the name is unknown.
    """
    tableaus = named_tableaus()
    if name not in tableaus:
        available = ", ".join(tableaus)
        raise KeyError(f"Unknown tableau '{name}'. Available: {available}")
    return tableaus[name]


def is_entangling(t: BlockMatrix) -> bool:
    """False iff `t` is a block permutation followed by single-block gates."""
    return not t.has_permutation_support()


def conjugate_blockwise(t: BlockMatrix, r: F2Matrix) -> BlockMatrix:
    """Return ``D t D^-1`` with ``D = diag(r, ..., r)``."""
    d = F2Matrix.block_diag(*([r] * t.ell))
    d_inv = F2Matrix.block_diag(*([invert(r)] * t.ell))
    return BlockMatrix(t.ell, d @ t.t @ d_inv)


_ENTANGLING_BY_CASE = {0: "cnot", 2: "cnot", 3: "ycy", 4: "cnot"}


def has_entangling_two_qubit_gate(code: StabilizerCode) -> tuple[bool, BlockMatrix | None]:
    """Find a transversal entangling two-block gate if one exists.

    Exists iff the code is locally equivalent to a CSS or a self-dual code.
    The witness is mapped back to `code` through the classification witness.
    """
    family = classify(code)
    name = _ENTANGLING_BY_CASE.get(family.case)
    if name is None:
        return False, None
    gate = conjugate_blockwise(get_tableau(name), family.witness)
    logger.debug("Entangling witness %s for case %d", name, family.case)
    return True, gate


def small_gate_triviality(
    code: StabilizerCode,
    ell: int,
    settings: EnumerationSettings | None = None,
) -> bool:
    """Check that a generic code has only block permutations on `ell` blocks.

    Raises:
        NotGenericCodeError: If the code is not in the generic family.
    """
    if not 1 <= ell <= 3:
        raise ValueError("ell must be 1, 2 or 3")
    case = classify(code).case
    if case != 5:
        raise NotGenericCodeError(case)
    group = enumerate_group(code, ell, settings=settings)
    return set(group) == set(block_permutations(ell))


@dataclass(frozen=True)
class MagicPrerequisites:
    """Tableau-level facts needed before using a code for magic-state preparation."""

    has_algebra_e: bool
    hadamard: GateVerdict
    controlled_y: GateVerdict

    @property
    def ready(self) -> bool:
        return self.has_algebra_e and self.hadamard.transversal and self.controlled_y.transversal


def transversal_gates_for_magic(code: StabilizerCode) -> MagicPrerequisites:
    """Certify transversal H and controlled-Y and report whether the algebra is E."""
    tableaus = named_tableaus()
    return MagicPrerequisites(
        has_algebra_e=endo_algebra(code).tag == "E",
        hadamard=certify_gate(code, tableaus["hadamard"]),
        controlled_y=certify_gate(code, tableaus["cy"]),
    )
