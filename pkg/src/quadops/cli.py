"""Command-line surface for the engine.

Subcommands cover the whole engine: dualization, square products,
quotients, relabeling isomorphism search, free-algebra component
dimensions, the generating-series inverse check, the full verification
battery, and weight-component expansion. Presentations come from a
source file in the text format or from the built-in catalog via the
file argument "builtins"; operand names may be wrapped as
"dual:NAME" to dualize before use.

Exit codes: 0 when every requested check passes (findings included),
1 when a check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import ASCII_ALIASES, catalog
from .dsl import format_relation, parse, parse_relation, print_presentation
from .expansion import component_dim, format_monomial, weight_component
from .presentations import (
    Presentation,
    dual,
    find_relabeling_iso,
    quotient,
    square,
)
from .series import SERIES_LIMITATION_NOTE, dim_series, gk_defect
from .verify import VerifyConfig, report_to_json, report_to_text, verify_all

__all__ = ["main"]

HARD_WEIGHT = 5

_GLOBAL_FLAGS = (
    ("--format", dict(choices=("text", "json"), help="output format")),
    (
        "--max-weight",
        dict(type=int, dest="max_weight", help="weight ceiling for heavy work"),
    ),
    (
        "--allow-large",
        dict(
            action="store_true",
            dest="allow_large",
            help=f"permit work above weight {HARD_WEIGHT} "
            "(weight 4 for verify-paper)",
        ),
    ),
)


class UsageError(Exception):
    """Bad invocation or unparsable input; exits with code 2."""


def _add_global_flags(parser: argparse.ArgumentParser, top: bool) -> None:
    for name, options in _GLOBAL_FLAGS:
        kwargs = dict(options)
        if top:
            if kwargs.get("action") == "store_true":
                kwargs["default"] = False
            else:
                kwargs["default"] = None
        else:
            # subparser defaults would overwrite values parsed at the
            # top level, so subparsers only set what was given
            kwargs["default"] = argparse.SUPPRESS
        parser.add_argument(name, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadops",
        description="computer algebra for binary quadratic operad "
        "presentations",
    )
    _add_global_flags(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("dual", help="print the dual presentation")
    _add_global_flags(sp, top=False)
    sp.add_argument("file", help="source file or 'builtins'")
    sp.add_argument("op", help="operad name, optionally dual:NAME")

    sp = sub.add_parser("square", help="print the square product")
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op1")
    sp.add_argument("op2")

    sp = sub.add_parser(
        "quotient", help="add relations and print the quotient"
    )
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op")
    sp.add_argument(
        "--rel",
        action="append",
        required=True,
        help="relation to add, in the source grammar (repeatable)",
    )

    sp = sub.add_parser(
        "iso", help="search for a signed relabeling isomorphism"
    )
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op1")
    sp.add_argument("op2")

    sp = sub.add_parser("dims", help="free-algebra component dimensions")
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op")
    sp.add_argument("--max", type=int, default=4, help="largest weight")

    sp = sub.add_parser(
        "gk-check",
        help="generating-series inverse test against the dual",
    )
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op")
    sp.add_argument("--max", type=int, default=4, help="series order")

    sp = sub.add_parser(
        "verify-paper", help="run the full verification battery"
    )
    _add_global_flags(sp, top=False)
    sp.add_argument(
        "--report", help="also write the report to this path"
    )
    sp.add_argument(
        "--scan-grid",
        type=int,
        default=2,
        dest="scan_grid",
        help="radius of the uniqueness scan grid, 0 disables the scan",
    )

    sp = sub.add_parser(
        "expand", help="weight component of the free algebra"
    )
    _add_global_flags(sp, top=False)
    sp.add_argument("file")
    sp.add_argument("op")
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument(
        "--basis",
        action="store_true",
        help="list the surviving basis monomials",
    )

    return parser


def _load(file_arg: str) -> tuple[dict[str, Presentation], dict[str, str]]:
    if file_arg == "builtins":
        cat = catalog()
        return dict(cat.presentations), dict(ASCII_ALIASES)
    path = Path(file_arg)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {file_arg}: {exc}") from exc
    result = parse(text)
    if not result.ok:
        lines = [f"{file_arg}:{d}" for d in result.diagnostics]
        raise UsageError("\n".join(lines))
    return result.presentations, {}


def _resolve(
    presentations: dict[str, Presentation], op_arg: str
) -> tuple[str, Presentation]:
    name = op_arg
    dual_count = 0
    while name.startswith("dual:"):
        dual_count += 1
        name = name[len("dual:") :]
    if name not in presentations:
        known = ", ".join(presentations)
        raise UsageError(f"unknown operad {name}; have: {known}")
    p = presentations[name]
    for _ in range(dual_count):
        p = dual(p)
        name = f"{name}_dual"
    return name, p


def _weight_guard(requested: int, ceiling: int | None, allow: bool) -> None:
    if requested < 1:
        raise UsageError("weight must be at least 1")
    cap = HARD_WEIGHT if ceiling is None else ceiling
    if requested > cap:
        raise UsageError(
            f"weight {requested} is above the ceiling {cap}; "
            "raise --max-weight"
        )
    if requested > HARD_WEIGHT and not allow:
        raise UsageError(
            f"weight {requested} is above {HARD_WEIGHT} and needs "
            "--allow-large"
        )


def _presentation_payload(name: str, p: Presentation) -> dict:
    names = p.generators.names
    return {
        "operad": name,
        "operations": list(names),
        "dimension": p.relations.dimension,
        "relations": [format_relation(r, names) for r in p.relation_rows()],
    }


def _presentation_output(
    command: str, name: str, p: Presentation
) -> tuple[int, str, dict]:
    payload = {"command": command, **_presentation_payload(name, p)}
    return 0, print_presentation(p, name).rstrip("\n"), payload


def _json_number(value: Fraction):
    if value.denominator == 1:
        return int(value)
    return str(value)


def _cmd_dual(ns: argparse.Namespace) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name, p = _resolve(presentations, ns.op)
    return _presentation_output("dual", f"{name}_dual", dual(p))


def _cmd_square(ns: argparse.Namespace) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name1, p1 = _resolve(presentations, ns.op1)
    name2, p2 = _resolve(presentations, ns.op2)
    return _presentation_output(
        "square", f"{name1}_square_{name2}", square(p1, p2)
    )


def _cmd_quotient(ns: argparse.Namespace) -> tuple[int, str, dict]:
    presentations, aliases = _load(ns.file)
    name, p = _resolve(presentations, ns.op)
    vectors = []
    for text in ns.rel:
        vector, diagnostics = parse_relation(
            text, p.generators.names, aliases
        )
        if vector is None:
            lines = [f"--rel {text!r}: {d}" for d in diagnostics]
            raise UsageError("\n".join(lines))
        vectors.append(vector)
    return _presentation_output(
        "quotient", f"{name}_quotient", quotient(p, vectors)
    )


def _cmd_iso(ns: argparse.Namespace) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name1, p1 = _resolve(presentations, ns.op1)
    name2, p2 = _resolve(presentations, ns.op2)
    payload: dict = {"command": "iso", "from": name1, "to": name2}
    if p1.num_ops != p2.num_ops:
        payload["found"] = False
        return 0, "none", payload
    sigma = find_relabeling_iso(p1, p2)
    if sigma is None:
        payload["found"] = False
        return 0, "none", payload
    src = p1.generators.names
    dst = p2.generators.names
    assignment = []
    lines = []
    for i in range(len(src)):
        sign = sigma.signs[i]
        target = dst[sigma.permutation[i]]
        assignment.append(
            {"from": src[i], "to": target, "sign": sign}
        )
        prefix = "-" if sign < 0 else ""
        lines.append(f"{src[i]} -> {prefix}{target}")
    payload["found"] = True
    payload["permutation"] = list(sigma.permutation)
    payload["signs"] = list(sigma.signs)
    payload["assignment"] = assignment
    return 0, "\n".join(lines), payload


def _cmd_dims(
    ns: argparse.Namespace, ceiling: int | None, allow: bool
) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name, p = _resolve(presentations, ns.op)
    _weight_guard(ns.max, ceiling, allow)
    weights = list(range(1, ns.max + 1))
    dims = [component_dim(p, n) for n in weights]
    payload = {
        "command": "dims",
        "operad": name,
        "weights": weights,
        "dims": dims,
    }
    return 0, ", ".join(str(d) for d in dims), payload


def _cmd_gk(
    ns: argparse.Namespace, ceiling: int | None, allow: bool
) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name, p = _resolve(presentations, ns.op)
    _weight_guard(ns.max, ceiling, allow)
    if ns.max < 2:
        raise UsageError("the series test needs order at least 2")
    p_dims = dim_series(p, ns.max)
    dual_dims = dim_series(dual(p), ns.max)
    defect = gk_defect(p_dims, dual_dims, ns.max)
    coefficients = [defect.coefficient(d) for d in range(1, ns.max + 1)]
    zero = all(c == 0 for c in coefficients)
    note = f"series checks are {SERIES_LIMITATION_NOTE}"
    payload = {
        "command": "gk-check",
        "operad": name,
        "dims": list(p_dims.dims),
        "dual_dims": list(dual_dims.dims),
        "defect": [_json_number(c) for c in coefficients],
        "zero": zero,
        "note": note,
    }
    verdict = (
        f"zero through degree {ns.max}"
        if zero
        else "nonzero: the pair cannot be dimension-inverse"
    )
    text = "\n".join(
        [
            f"dims:      {', '.join(str(d) for d in p_dims.dims)}",
            f"dual dims: {', '.join(str(d) for d in dual_dims.dims)}",
            "defect coefficients for degrees 1.."
            f"{ns.max}: {', '.join(str(c) for c in coefficients)}",
            f"verdict: {verdict}",
            f"note: {note}",
        ]
    )
    return (0 if zero else 1), text, payload


def _cmd_verify(
    ns: argparse.Namespace,
    ceiling: int | None,
    allow: bool,
    fmt: str,
) -> tuple[int, str, dict]:
    max_weight = 4 if ceiling is None else ceiling
    if max_weight > 4 and not allow:
        raise UsageError(
            "battery weights above 4 take minutes and need --allow-large"
        )
    try:
        config = VerifyConfig(
            max_weight=max_weight,
            scan_radius=ns.scan_grid if ns.scan_grid > 0 else 2,
            run_scan=ns.scan_grid > 0,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify_all(config=config)
    text = report_to_text(report)
    payload = json.loads(report_to_json(report))
    if ns.report:
        rendered = (
            json.dumps(payload, indent=2, ensure_ascii=False)
            if fmt == "json"
            else text
        )
        try:
            Path(ns.report).write_text(rendered + "\n", encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {ns.report}: {exc}") from exc
    return (0 if report.ok else 1), text, payload


def _cmd_expand(
    ns: argparse.Namespace, ceiling: int | None, allow: bool
) -> tuple[int, str, dict]:
    presentations, _ = _load(ns.file)
    name, p = _resolve(presentations, ns.op)
    _weight_guard(ns.weight, ceiling, allow)
    component = weight_component(p, ns.weight)
    payload = {
        "command": "expand",
        "operad": name,
        "weight": ns.weight,
        "dimension": component.dimension,
    }
    lines = [f"weight {ns.weight} dimension {component.dimension}"]
    if ns.basis:
        monomials = [
            format_monomial(m, p.generators.names)
            for m in component.surviving_monomials()
        ]
        payload["basis"] = monomials
        lines.extend(monomials)
    return 0, "\n".join(lines), payload


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    fmt = ns.format or "text"
    ceiling = ns.max_weight
    allow = ns.allow_large
    try:
        if ceiling is not None and ceiling < 1:
            raise UsageError("--max-weight must be at least 1")
        if ns.command == "dual":
            code, text, payload = _cmd_dual(ns)
        elif ns.command == "square":
            code, text, payload = _cmd_square(ns)
        elif ns.command == "quotient":
            code, text, payload = _cmd_quotient(ns)
        elif ns.command == "iso":
            code, text, payload = _cmd_iso(ns)
        elif ns.command == "dims":
            code, text, payload = _cmd_dims(ns, ceiling, allow)
        elif ns.command == "gk-check":
            code, text, payload = _cmd_gk(ns, ceiling, allow)
        elif ns.command == "verify-paper":
            code, text, payload = _cmd_verify(ns, ceiling, allow, fmt)
        else:
            code, text, payload = _cmd_expand(ns, ceiling, allow)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
