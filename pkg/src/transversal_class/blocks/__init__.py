"""Tableaus on several code blocks and the transversal Clifford groups."""

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
    block_permutations,
    in_Ml_A,
    is_unitary_over_A,
    preserves_l_blocks,
)

__all__ = [
    "FAMILY_TABLE",
    "TABLE_ERRATA",
    "BlockMatrix",
    "TransversalGroup",
    "act_blocks",
    "bar",
    "bar_transpose",
    "block_permutations",
    "count_group",
    "enumerate_algebra_group",
    "enumerate_group",
    "in_Ml_A",
    "is_unitary_over_A",
    "preserves_l_blocks",
    "verified_order",
]
