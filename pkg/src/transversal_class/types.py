"""Type definitions for transversal-class."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Literal, Union

from pydantic import BaseModel

from transversal_class.errors import ConfigurationError
from transversal_class.f2core import F2Matrix

AlgebraTag = Literal["A0", "A1", "A2", "A3", "A4", "A5", "B0", "B1", "B2", "B3", "L", "E"]
"""Catalog name of a subalgebra of M2(F2) that occurs for stabilizer codes."""

FamilyCase = Literal[0, 1, 2, 3, 4, 5]
"""Index of one of the six code families."""

THREADS_ENV_VAR = "TCLASS_THREADS"


class EnumerationSettings(BaseModel):
    """Resource limits for group enumeration and distance search.

    Example:
        ```python
        from transversal_class import EnumerationSettings

        settings = EnumerationSettings(cap=10_000)
        settings = EnumerationSettings.from_env()  # honours TCLASS_THREADS
        ```
    """

    cap: int = 2_000_000
    """Maximum number of group elements kept in memory."""

    node_cap: int = 100_000_000
    """Maximum number of search nodes visited in counting mode."""

    workers: int = 1
    """Worker processes used to fan out over the first block row."""

    distance_max_n: int = 14
    """Largest qubit count for brute-force distance."""

    @classmethod
    def from_env(cls, **overrides: Any) -> EnumerationSettings:
        """Build settings, taking `workers` from `TCLASS_THREADS` when set.

        Raises:
            ConfigurationError: If the variable is not a positive integer.
        """
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is not None and "workers" not in overrides:
            try:
                workers = int(raw)
            except ValueError:
                raise ConfigurationError(
                    f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
                ) from None
            if workers < 1:
                raise ConfigurationError(f"{THREADS_ENV_VAR} must be positive, got {workers}")
            overrides["workers"] = workers
        return cls(**overrides)


@dataclass(frozen=True)
class BlockOutsideAlgebra:
    """A block of the tableau that is not in the code's endomorphism algebra."""

    position: tuple[int, int]  # 0-based (block row, block column)
    block: F2Matrix
    algebra_tag: str
    algebra_elements: tuple[F2Matrix, ...]


@dataclass(frozen=True)
class NotSymplectic:
    """The tableau fails T J T^t = J."""


@dataclass(frozen=True)
class Accepted:
    """The tableau lies in the transversal group of the code's family."""

    family_tag: str
    group_name: str


VerdictReason = Union[BlockOutsideAlgebra, NotSymplectic, Accepted]


@dataclass(frozen=True)
class GateVerdict:
    """Result of certifying one tableau against one code."""

    transversal: bool
    reason: VerdictReason


class CorpusEntry(BaseModel):
    """A built-in stabilizer code with its expected family."""

    name: str
    """Short identifier, e.g. "513"."""

    stab_text: str
    """Generators in `.stab` format."""

    expected_case: int
    """Family case the code must classify to."""

    note: str = ""
    """Where the code comes from."""


class Report(BaseModel):
    """Deterministic result envelope emitted by every CLI command."""

    schema_version: str = "1"
    """Version of the JSON layout."""

    command: str
    """Subcommand that produced the report."""

    inputs: dict[str, Any] = {}
    """Echo of input files and flags."""

    result: dict[str, Any] = {}
    """Command-specific payload."""

    timings: dict[str, float] = {}
    """Wall-clock seconds per phase."""
