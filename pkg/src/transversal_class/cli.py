"""Command-line interface: ``transversal-class <command> ...``.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 input
error, 3 resource cap.

Code arguments are `.stab` file paths, or ``corpus:NAME`` for a built-in code.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from transversal_class.blocks.group import (
    FAMILY_TABLE,
    count_group,
    enumerate_group,
    predicted_order,
    verified_order,
)
from transversal_class.blocks.matrix import BlockMatrix
from transversal_class.certify import (
    certify_gate,
    has_entangling_two_qubit_gate,
    named_tableaus,
)
from transversal_class.code import StabilizerCode, distance, read_code, render
from transversal_class.corpus import BUILTIN_CODES, get_code
from transversal_class.endo.algebra import endo_algebra
from transversal_class.endo.classify import classify, family_name, group_name
from transversal_class.errors import (
    CapExceededError,
    ConfigurationError,
    DistanceCapError,
    OrderUnavailableError,
    TransversalError,
)
from transversal_class.f2core import F2Matrix
from transversal_class.types import (
    BlockOutsideAlgebra,
    EnumerationSettings,
    GateVerdict,
    NotSymplectic,
    Report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP = 3

CORPUS_PREFIX = "corpus:"

_CAP_ERRORS = (CapExceededError, DistanceCapError, OrderUnavailableError)

Handler = Callable[[argparse.Namespace], tuple[Report, int]]


def _matrix_rows(m: F2Matrix) -> list[str]:
    return list(m.sort_key())


def _load_code(source: str) -> StabilizerCode:
    if source.startswith(CORPUS_PREFIX):
        return get_code(source[len(CORPUS_PREFIX) :])
    return read_code(source)


def _load_tableau(source: str) -> BlockMatrix:
    path = Path(source)
    if not path.exists() and source in named_tableaus():
        return named_tableaus()[source]
    return BlockMatrix.from_text(path.read_text(encoding="utf-8"))


class _Timer:
    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    def run(self, phase: str, fn: Callable[[], Any]) -> Any:
        start = time.perf_counter()
        try:
            return fn()
        finally:
            self.timings[phase] = round(time.perf_counter() - start, 6)


def _report(
    command: str, inputs: dict[str, Any], result: dict[str, Any], timer: _Timer
) -> Report:
    return Report(command=command, inputs=inputs, result=result, timings=timer.timings)


def _table_facts(case: int, ell: int, order: int) -> dict[str, Any]:
    """Compare an order with the published table, flagging known errata."""
    published = FAMILY_TABLE.get(case, {}).get(ell)
    if published is None:
        return {}
    facts: dict[str, Any] = {"table_order": str(published), "matches_table": published == order}
    verified = verified_order(case, ell)
    if verified != published:
        facts["verified_order"] = str(verified)
        facts["matches_verified"] = verified == order
        facts["table_erratum"] = f"published order {published} is wrong, verified {verified}"
    return facts


# -- commands -----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    code = timer.run("parse", lambda: _load_code(args.code))
    family = timer.run("classify", lambda: classify(code))
    result = {
        "n": code.n,
        "k": code.k,
        "case": family.case,
        "family": family.name,
        "algebra": family.tag,
        "ring": family.algebra.entry.ring,
        "algebra_elements": [_matrix_rows(m) for m in family.algebra.elements],
        "witness": _matrix_rows(family.witness),
        "canonical_code": render(family.canonical_code).splitlines(),
    }
    return _report("classify", {"code": args.code}, result, timer), EXIT_OK


def cmd_endo(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    code = timer.run("parse", lambda: _load_code(args.code))
    algebra = timer.run("endo", lambda: endo_algebra(code))
    result = {
        "algebra": algebra.tag,
        "size": algebra.size,
        "dim": algebra.dim,
        "ring": algebra.entry.ring,
        "elements": [_matrix_rows(m) for m in algebra.elements],
    }
    return _report("endo", {"code": args.code}, result, timer), EXIT_OK


def cmd_group(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    settings = _settings(args)
    code = timer.run("parse", lambda: _load_code(args.code))
    algebra = timer.run("endo", lambda: endo_algebra(code))
    case = algebra.entry.case
    ell = args.blocks
    inputs = {"code": args.code, "blocks": ell, "count_only": args.count_only, "out": args.out}
    result: dict[str, Any] = {
        "case": case,
        "algebra": algebra.tag,
        "group": group_name(case, ell),
    }
    try:
        if args.count_only:
            order = timer.run("count", lambda: count_group(case, ell, settings))
        else:
            group = timer.run("enumerate", lambda: enumerate_group(code, ell, settings=settings))
            order = group.order
            if args.out:
                Path(args.out).write_text(group.to_text(), encoding="utf-8")
            else:
                result["elements"] = [_matrix_rows(t.t) for t in group]
    except CapExceededError as exc:
        predicted = exc.predicted if exc.predicted is not None else predicted_order(case, ell)
        result["error"] = str(exc)
        result["predicted_order"] = None if predicted is None else str(predicted)
        return _report("group", inputs, result, timer), EXIT_CAP
    result["order"] = str(order)
    result.update(_table_facts(case, ell, order))
    return _report("group", inputs, result, timer), EXIT_OK


def _verdict_payload(verdict: GateVerdict) -> dict[str, Any]:
    reason = verdict.reason
    if isinstance(reason, BlockOutsideAlgebra):
        i, j = reason.position
        return {
            "transversal": False,
            "reason": "block outside algebra",
            "block_position": [i + 1, j + 1],
            "block": _matrix_rows(reason.block),
            "algebra": reason.algebra_tag,
            "algebra_elements": [_matrix_rows(m) for m in reason.algebra_elements],
        }
    if isinstance(reason, NotSymplectic):
        return {"transversal": False, "reason": "not symplectic"}
    return {
        "transversal": True,
        "reason": "accepted",
        "algebra": reason.family_tag,
        "group": reason.group_name,
    }


def cmd_certify(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    code = timer.run("parse", lambda: _load_code(args.code))
    tableau = timer.run("parse_tableau", lambda: _load_tableau(args.tableau))
    verdict = timer.run("certify", lambda: certify_gate(code, tableau))
    report = Report(
        command="certify",
        inputs={"code": args.code, "tableau": args.tableau},
        result=_verdict_payload(verdict),
        timings=timer.timings,
    )
    return report, EXIT_OK if verdict.transversal else EXIT_NEGATIVE


def cmd_distance(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    settings = _settings(args)
    code = timer.run("parse", lambda: _load_code(args.code))
    d = timer.run("distance", lambda: distance(code, settings.distance_max_n))
    result = {"n": code.n, "k": code.k, "d": d}
    return _report("distance", {"code": args.code}, result, timer), EXIT_OK


def cmd_entangling(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    code = timer.run("parse", lambda: _load_code(args.code))
    exists, witness = timer.run("search", lambda: has_entangling_two_qubit_gate(code))
    result: dict[str, Any] = {"entangling": exists}
    if witness is not None:
        result["witness"] = _matrix_rows(witness.t)
    report = _report("entangling", {"code": args.code}, result, timer)
    return report, EXIT_OK if exists else EXIT_NEGATIVE


def cmd_orders(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    settings = _settings(args)
    order = timer.run("count", lambda: count_group(args.case, args.blocks, settings))
    result: dict[str, Any] = {
        "case": args.case,
        "family": family_name(args.case),
        "group": group_name(args.case, args.blocks),
        "order": str(order),
    }
    result.update(_table_facts(args.case, args.blocks, order))
    inputs = {"case": args.case, "blocks": args.blocks}
    return _report("orders", inputs, result, timer), EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> tuple[Report, int]:
    timer = _Timer()
    codes = []
    for entry in BUILTIN_CODES.values():
        code = get_code(entry.name)
        family = timer.run(f"classify:{entry.name}", lambda code=code: classify(code))
        codes.append(
            {
                "name": entry.name,
                "n": code.n,
                "k": code.k,
                "expected_case": entry.expected_case,
                "case": family.case,
                "algebra": family.tag,
                "note": entry.note,
            }
        )
    return _report("corpus", {}, {"codes": codes}, timer), EXIT_OK


# -- wiring -------------------------------------------------------------------


def _settings(args: argparse.Namespace) -> EnumerationSettings:
    overrides: dict[str, Any] = {}
    if getattr(args, "cap", None) is not None:
        overrides["cap"] = args.cap
    if getattr(args, "max_n", None) is not None:
        overrides["distance_max_n"] = args.max_n
    return EnumerationSettings.from_env(**overrides)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit the report as JSON.")
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr.")

    parser = argparse.ArgumentParser(
        prog="transversal-class",
        description="Classify stabilizer codes and their transversal Clifford gates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("classify", cmd_classify, "Family, algebra and local Clifford witness.")
    p.add_argument("code", help="Path to a .stab file or corpus:NAME.")

    p = add("endo", cmd_endo, "Endomorphism algebra of a code.")
    p.add_argument("code")

    p = add("group", cmd_group, "Enumerate or count the transversal group.")
    p.add_argument("code")
    p.add_argument("--blocks", type=_positive_int, default=1, help="Number of code blocks.")
    p.add_argument("--count-only", action="store_true", help="Report the order only.")
    p.add_argument("--out", help="Write the element dump to this file.")
    p.add_argument("--cap", type=_positive_int, help="Maximum number of stored elements.")

    p = add("certify", cmd_certify, "Certify a tableau as a transversal gate.")
    p.add_argument("code")
    p.add_argument(
        "--tableau", required=True, help="Tableau file, or a built-in name such as cnot."
    )

    p = add("distance", cmd_distance, "Brute-force code distance.")
    p.add_argument("code")
    p.add_argument("--max-n", type=_positive_int, help="Largest n to search.")

    p = add("entangling", cmd_entangling, "Find a transversal entangling two-block gate.")
    p.add_argument("code")

    p = add("orders", cmd_orders, "Order of a family's transversal group.")
    p.add_argument("--case", type=int, choices=range(6), required=True)
    p.add_argument("--blocks", type=_positive_int, required=True)
    p.add_argument("--cap", type=_positive_int)

    add("corpus", cmd_corpus, "List the built-in codes and their families.")
    return parser


def _render_value(value: Any, indent: str) -> list[str]:
    if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
        return [f"{indent}{v}" for v in value]
    if isinstance(value, list):
        lines: list[str] = []
        for item in value:
            lines.extend(_render_value(item, indent + "  "))
            lines.append("")
        return lines
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            lines.extend(_render_item(key, item, indent))
        return lines
    return [f"{indent}{value}"]


def _render_item(key: str, value: Any, indent: str = "") -> list[str]:
    if isinstance(value, (list, dict)):
        return [f"{indent}{key}:", *_render_value(value, indent + "  ")]
    return [f"{indent}{key}: {value}"]


def render_text(report: Report) -> str:
    """Human-readable rendering of a report's result payload."""
    lines: list[str] = []
    for key, value in report.result.items():
        lines.extend(_render_item(key, value))
    return "\n".join(lines).rstrip() + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        report, status = args.handler(args)
    except _CAP_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TransversalError, ConfigurationError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    if status == EXIT_CAP:
        print(f"error: {report.result.get('error')}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
