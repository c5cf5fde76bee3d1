"""Endomorphism algebras of stabilizer codes and the family classification."""

from transversal_class.endo.algebra import (
    EndoAlgebra,
    act,
    algebra_id,
    conjugate_algebra,
    endo_algebra,
    invariant_under,
)
from transversal_class.endo.catalog import BUILTIN_ALGEBRAS, AlgebraEntry, get_algebra
from transversal_class.endo.classify import (
    FAMILY_NAMES,
    GROUP_NAMES,
    CodeFamily,
    classify,
    family_name,
    group_name,
)

__all__ = [
    "BUILTIN_ALGEBRAS",
    "FAMILY_NAMES",
    "GROUP_NAMES",
    "AlgebraEntry",
    "CodeFamily",
    "EndoAlgebra",
    "act",
    "algebra_id",
    "classify",
    "conjugate_algebra",
    "endo_algebra",
    "family_name",
    "get_algebra",
    "group_name",
    "invariant_under",
]
