"""Classification of stabilizer codes by their transversal Clifford gates.

transversal-class computes the algebra of 2x2 binary matrices whose transversal
action preserves a stabilizer code, sorts the code into one of six families
with an explicit local Clifford witness, and enumerates or certifies the
diagonal transversal Clifford gates on several code blocks.

Basic usage:
    ```python
    from transversal_class import classify, enumerate_group, parse_code

    code = parse_code("XZZXI\\nIXZZX\\nXIXZZ\\nZXIXZ")
    family = classify(code)
    print(family.case, family.tag)  # 1 A1

    group = enumerate_group(code, 2)
    print(group.order)  # 18
    ```

Gate certification:
    ```python
    from transversal_class import certify_gate, get_code, named_tableaus

    verdict = certify_gate(get_code("422"), named_tableaus()["cnot"])
    assert verdict.transversal
    ```
"""

from __future__ import annotations

from typing import TYPE_CHECKING

# Core exports - always available
from transversal_class.blocks.group import (
    FAMILY_TABLE,
    TABLE_ERRATA,
    TransversalGroup,
    count_group,
    enumerate_algebra_group,
    enumerate_group,
    verified_order,
)
from transversal_class.blocks.matrix import (
    BlockMatrix,
    act_blocks,
    bar,
    bar_transpose,
    in_Ml_A,
    is_unitary_over_A,
    preserves_l_blocks,
)
from transversal_class.code import (
    PauliString,
    StabilizerCode,
    distance,
    dual,
    is_css,
    is_gf4_linear,
    is_self_dual_code,
    is_semi_self_dual,
    parse_code,
    random_code,
    render,
    transform,
)
from transversal_class.endo import (
    CodeFamily,
    EndoAlgebra,
    act,
    algebra_id,
    classify,
    conjugate_algebra,
    endo_algebra,
    invariant_under,
)
from transversal_class.errors import (
    AlgebraClosureError,
    AnticommutingGeneratorsError,
    CapExceededError,
    ConfigurationError,
    DimensionMismatchError,
    DistanceCapError,
    NoLogicalOperatorsError,
    NotGenericCodeError,
    OrderUnavailableError,
    SingularMatrixError,
    StabParseError,
    TableauParseError,
    TransversalError,
    UnknownAlgebraError,
)
from transversal_class.f2core import F2Matrix, F2Vector, RowSpace, invert, member, rref
from transversal_class.symplectic import is_symplectic, omega, sp2_elements, sp_order
from transversal_class.types import (
    CorpusEntry,
    EnumerationSettings,
    GateVerdict,
    Report,
)

if TYPE_CHECKING:
    from transversal_class.certify import (
        certify_gate,
        cnot_tableau_from_gl,
        get_tableau,
        has_entangling_two_qubit_gate,
        named_tableaus,
        small_gate_triviality,
        transversal_gates_for_magic,
    )
    from transversal_class.cli import main
    from transversal_class.corpus import (
        BUILTIN_CODES,
        get_code,
        search_generic_code,
    )

# Certification, corpus and CLI are loaded on first access
_LAZY_IMPORTS = {
    # Certification
    "certify_gate": "transversal_class.certify",
    "cnot_tableau_from_gl": "transversal_class.certify",
    "get_tableau": "transversal_class.certify",
    "has_entangling_two_qubit_gate": "transversal_class.certify",
    "named_tableaus": "transversal_class.certify",
    "small_gate_triviality": "transversal_class.certify",
    "transversal_gates_for_magic": "transversal_class.certify",
    # Built-in codes
    "BUILTIN_CODES": "transversal_class.corpus",
    "get_code": "transversal_class.corpus",
    "search_generic_code": "transversal_class.corpus",
    # Command line
    "main": "transversal_class.cli",
}


def __getattr__(name: str) -> object:
    """Lazy loading for certification, corpus and CLI helpers."""
    if name in _LAZY_IMPORTS:
        import importlib

        module = importlib.import_module(_LAZY_IMPORTS[name])
        return getattr(module, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    # GF(2) kernel
    "F2Matrix",
    "F2Vector",
    "RowSpace",
    "invert",
    "member",
    "rref",
    # Symplectic
    "is_symplectic",
    "omega",
    "sp2_elements",
    "sp_order",
    # Codes
    "PauliString",
    "StabilizerCode",
    "distance",
    "dual",
    "is_css",
    "is_gf4_linear",
    "is_self_dual_code",
    "is_semi_self_dual",
    "parse_code",
    "random_code",
    "render",
    "transform",
    # Algebras and classification
    "CodeFamily",
    "EndoAlgebra",
    "act",
    "algebra_id",
    "classify",
    "conjugate_algebra",
    "endo_algebra",
    "invariant_under",
    # Blocks and groups
    "BlockMatrix",
    "FAMILY_TABLE",
    "TABLE_ERRATA",
    "TransversalGroup",
    "act_blocks",
    "bar",
    "bar_transpose",
    "count_group",
    "enumerate_algebra_group",
    "enumerate_group",
    "in_Ml_A",
    "is_unitary_over_A",
    "preserves_l_blocks",
    "verified_order",
    # Types
    "CorpusEntry",
    "EnumerationSettings",
    "GateVerdict",
    "Report",
    # Errors
    "AlgebraClosureError",
    "AnticommutingGeneratorsError",
    "CapExceededError",
    "ConfigurationError",
    "DimensionMismatchError",
    "DistanceCapError",
    "NoLogicalOperatorsError",
    "NotGenericCodeError",
    "OrderUnavailableError",
    "SingularMatrixError",
    "StabParseError",
    "TableauParseError",
    "TransversalError",
    "UnknownAlgebraError",
    # Certification (lazy)
    "certify_gate",
    "cnot_tableau_from_gl",
    "get_tableau",
    "has_entangling_two_qubit_gate",
    "named_tableaus",
    "small_gate_triviality",
    "transversal_gates_for_magic",
    # Corpus (lazy)
    "BUILTIN_CODES",
    "get_code",
    "search_generic_code",
    # CLI (lazy)
    "main",
]

try:
    from importlib.metadata import version as _get_version

    __version__ = _get_version("transversal-class")
except Exception:  # pragma: no cover
    __version__ = "0.0.0"
