"""Built-in stabilizer codes with their expected families."""

from __future__ import annotations

import logging

import numpy as np

from transversal_class.code import StabilizerCode, parse_code, random_code
from transversal_class.endo.classify import classify
from transversal_class.types import CorpusEntry

logger = logging.getLogger(__name__)

# =============================================================================
# Corpus entries
# =============================================================================

CODE_422 = CorpusEntry(
    name="422",
    stab_text="XXXX\nZZZZ\n",
    expected_case=0,
    note="[[4,2,2]] code, self-dual CSS",
)

CODE_513 = CorpusEntry(
    name="513",
    stab_text="XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n",
    expected_case=1,
    note="[[5,1,3]] code, GF(4)-linear with algebra A1",
)

CODE_SELF_DUAL_4 = CorpusEntry(
    name="selfdual4",
    stab_text="XXZZ\nZZXX\n",
    expected_case=3,
    note="self-dual non-CSS 4-qubit code with algebra A3",
)

CODE_622 = CorpusEntry(
    name="622",
    stab_text="XXXXII\nIIXXXX\nZZZZII\nIIZZZZ\n",
    expected_case=0,
    note="[[6,2,2]] code, self-dual CSS",
)

CODE_612 = CorpusEntry(
    name="612",
    stab_text="XXXXII\nIIXXXX\nZZZZII\nIIZZZZ\nIYIYIY\n",
    expected_case=4,
    note="[[6,2,2]] gauge-fixed by IYIYIY to a [[6,1,2]] code with algebra E",
)

CODE_GENERIC_3 = CorpusEntry(
    name="generic3",
    stab_text="XZY\n",
    expected_case=5,
    note="single generator XZY; only 0 and I preserve it",
)

BUILTIN_CODES: dict[str, CorpusEntry] = {
    entry.name: entry
    for entry in (CODE_422, CODE_513, CODE_SELF_DUAL_4, CODE_622, CODE_612, CODE_GENERIC_3)
}
"""Built-in corpus keyed by name."""


def get_entry(name: str) -> CorpusEntry:
    """Get a corpus entry by name.

    Raises:
        KeyError: If the name is not in the corpus.
    """
    if name not in BUILTIN_CODES:
        available = ", ".join(BUILTIN_CODES)
        raise KeyError(f"Unknown code '{name}'. Available: {available}")
    return BUILTIN_CODES[name]


def get_code(name: str) -> StabilizerCode:
    """Parse a corpus code by name.

    Example:
        ```python
        from transversal_class import get_code

        code = get_code("513")
        assert (code.n, code.k) == (5, 1)
        ```
    """
    return parse_code(get_entry(name).stab_text)


def search_generic_code(
    seed: int,
    n: int = 4,
    dim: int = 2,
    attempts: int = 1000,
) -> StabilizerCode:
    """Draw random codes from a seeded generator until one is generic.

    Raises:
        ValueError: If no generic code turns up within `attempts` draws.
    """
    rng = np.random.default_rng(seed)
    for attempt in range(1, attempts + 1):
        code = random_code(n, dim, rng)
        if classify(code).case == 5:
            logger.debug("Generic code found after %d draws (seed %d)", attempt, seed)
            return code
    raise ValueError(f"No generic [[{n},{n - dim}]] code in {attempts} draws with seed {seed}")
