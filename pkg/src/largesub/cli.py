"""Command-line interface: ``largesub <command> ...``.

Exit codes: 0 success, 1 verification differences, 2 unparsable input,
3 invalid group parameters.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable, Optional, Sequence

from .orders import (
    CLASSICAL_FAMILIES,
    EXCEPTIONAL_TYPES,
    SPORADIC_NAMES,
    Alt,
    Classical,
    Exceptional,
    GroupId,
    InvalidGroup,
    Sporadic,
    order_simple,
)
from .structure import ParseError, UnknownName, eval_order, parse

EXIT_DIFF, EXIT_PARSE, EXIT_INVALID = 1, 2, 3

VERIFY_SCOPES = ("theorem1", "theorem2", "theorem3", "theorem4", "theorem5", "A1", "algebraic")


class UsageError(Exception):
    pass


def parse_group(tokens: Sequence[str]) -> GroupId:
    """``FAMILY n q``, ``ALT n``, ``SPOR name``, ``EXC type q`` or ``type q``.

    Raises :class:`UsageError` for malformed input and
    :class:`InvalidGroup` for well-formed but invalid parameters.
    """
    if not tokens:
        raise UsageError("missing group")
    head, rest = tokens[0], list(tokens[1:])

    def ints(k: int) -> list[int]:
        if len(rest) != k:
            raise UsageError(f"{head} takes {k} integer argument(s), got {len(rest)}")
        try:
            return [int(x) for x in rest]
        except ValueError:
            raise UsageError(f"expected integers after {head}, got {' '.join(rest)}") from None

    key = head.upper()
    if key == "ALT":
        return Alt(*ints(1))
    if key == "SPOR":
        if len(rest) != 1:
            raise UsageError("SPOR takes one group name")
        return Sporadic(rest[0])
    if key == "EXC":
        if len(rest) != 2:
            raise UsageError("EXC takes a type and q")
        head, rest = rest[0], rest[1:]
        key = head.upper()
    if head in CLASSICAL_FAMILIES:
        return Classical(head, *ints(2))
    if key in EXCEPTIONAL_TYPES:
        head = key
        return Exceptional(key, *ints(1))
    if head in SPORADIC_NAMES and not rest:
        return Sporadic(head)
    raise UsageError(
        f"unknown group family {head!r}; use one of {', '.join(CLASSICAL_FAMILIES)}, ALT, SPOR, EXC"
    )


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _tsv(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    lines = ["\t".join(columns)]
    for r in rows:
        cells = []
        for c in columns:
            v = r.get(c, "")
            if isinstance(v, (list, dict)):
                v = json.dumps(v, sort_keys=True)
            cells.append(str(v))
        lines.append("\t".join(cells))
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------


def cmd_order(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    g = order_simple(G)
    if args.format == "json":
        _emit(_dump({"group": G.label, "order": str(g.value),
                     "factorization": {str(p): e for p, e in sorted(g.factors.items())}}), args.out)
    else:
        _emit(f"{g.value}\n{g.factor_string()}", args.out)
    return 0


_REPORT_COLUMNS = ("ambient", "collection", "type_label", "params", "order", "maximal", "is_large",
                   "margin", "decided_by", "provenance", "reasons")


def _report_rows(reports) -> list[dict[str, Any]]:
    rows = []
    for r in sorted(reports, key=lambda r: r.descriptor.sort_key()):
        row = r.to_json()
        row["ambient"] = r.descriptor.ambient.label
        rows.append(row)
    return rows


def cmd_classify(args: argparse.Namespace) -> int:
    from .classifier import classify_almost_simple, classify_large

    G = parse_group(args.group)
    reports = classify_almost_simple(G) if args.almost_simple else classify_large(G)
    rows = _report_rows(reports)
    if args.format == "tsv":
        _emit(_tsv(rows, _REPORT_COLUMNS), args.out)
    else:
        _emit(_dump(rows), args.out)
    return 0


def _verify_grid(args: argparse.Namespace) -> dict[str, Any]:
    grid: dict[str, Any] = {}
    if args.n_max is not None:
        grid["n_max"] = args.n_max
    if args.q_max is not None:
        grid["q_max"] = args.q_max
    return grid


def cmd_verify(args: argparse.Namespace) -> int:
    from .algebraic import verify_algebraic_tables
    from .classifier import verify_table

    if args.scope == "algebraic":
        reports = [verify_algebraic_tables(**({"n_max": args.n_max} if args.n_max else {}))]
    else:
        reports = verify_table(args.scope, _verify_grid(args))
    rows = [r.to_json() for r in reports]
    bad = [r for r in rows if r["missing"] or r["extra"]]
    summary = {"scope": args.scope, "groups": len(rows), "with_diffs": len(bad),
               "reports": rows if args.all else bad}
    if args.format == "tsv":
        flat = [{"ambient": r["ambient"], "missing": r["missing"], "extra": r["extra"]} for r in bad]
        _emit(_tsv(flat, ("ambient", "missing", "extra")), args.out)
    else:
        _emit(_dump(summary), args.out)
    return EXIT_DIFF if bad else 0


def _scan_groups(family: str, n_max: int, q_max: int) -> list[GroupId]:
    from .classifier import classical_groups, exceptional_groups

    if family == "ALT":
        return [Alt(n) for n in range(5, n_max + 1)]
    if family == "SPOR":
        return [Sporadic(name) for name in SPORADIC_NAMES]
    if family == "EXC":
        return list(exceptional_groups(q_max))
    if family in CLASSICAL_FAMILIES:
        return list(classical_groups(n_max, q_max, (family,)))
    raise UsageError(f"unknown scan family {family!r}")


def _scan_one(G: GroupId) -> list[dict[str, Any]]:
    from .classifier import classify_large

    return [r for r in _report_rows(classify_large(G)) if r["is_large"] and r["maximal"]]


def cmd_scan(args: argparse.Namespace) -> int:
    groups = _scan_groups(args.family, args.n_max or 12, args.q_max or 32)
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(groups) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_one, groups, chunksize=4))
    else:
        parts = [_scan_one(G) for G in groups]
    rows = sorted((r for part in parts for r in part),
                  key=lambda r: (r["ambient"], r["collection"], r["type_label"], json.dumps(r["params"], sort_keys=True)))
    if args.format == "tsv":
        _emit(_tsv(rows, _REPORT_COLUMNS), args.out)
    else:
        _emit(_dump(rows), args.out)
    return 0


def _ast_json(node: Any) -> Any:
    if dataclasses.is_dataclass(node):
        out = {"node": type(node).__name__}
        for f in dataclasses.fields(node):
            out[f.name] = _ast_json(getattr(node, f.name))
        return out
    if isinstance(node, tuple):
        return [_ast_json(x) for x in node]
    return node


def cmd_parse_structure(args: argparse.Namespace) -> int:
    tree = parse(args.text)
    order = eval_order(tree)
    _emit(_dump({"input": args.text, "ast": _ast_json(tree), "order": str(order.value),
                 "factorization": order.factor_string()}), args.out)
    return 0


def cmd_algebraic(args: argparse.Namespace) -> int:
    from .algebraic import EXCEPTIONAL_PARABOLIC_DIMS, RootDatum, dim_parabolic, verify_algebraic_tables

    report = verify_algebraic_tables(n_max=args.n_max or 40)
    data = report.to_json()
    payload = {
        "ok": report.ok,
        "checked": len(set(report.expected)),
        "missing": data["missing"],
        "extra": data["extra"],
        "notes": data["notes"],
        "parabolic_dims": {t: [dim_parabolic(RootDatum(t), i) for i in range(1, len(d) + 1)]
                           for t, d in EXCEPTIONAL_PARABOLIC_DIMS.items()},
    }
    _emit(_dump(payload), args.out)
    return 0 if report.ok else EXIT_DIFF


# -- argument parsing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="largesub", description="Large maximal subgroups of finite simple groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, grid: bool = False, formats: tuple[str, ...] = ("json", "tsv")) -> None:
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output to this path")
        if grid:
            p.add_argument("--n-max", type=int)
            p.add_argument("--q-max", type=int)
            p.add_argument("--jobs", type=int, help="worker processes (default: all CPUs)")

    p = sub.add_parser("order", help="order of a simple group")
    p.add_argument("group", nargs="+", help="FAMILY n q | ALT n | SPOR name | EXC type q")
    common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("classify", help="largeness report for every catalogued maximal subgroup")
    p.add_argument("group", nargs="+")
    p.add_argument("--almost-simple", action="store_true", help="report the almost simple table rows instead")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="compare computed largeness with a classification table")
    p.add_argument("scope", choices=VERIFY_SCOPES)
    p.add_argument("--all", action="store_true", help="include reports without differences")
    common(p, grid=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="large maximal subgroups over a parameter grid")
    p.add_argument("family", help=f"{', '.join(CLASSICAL_FAMILIES)}, ALT, SPOR or EXC")
    common(p, grid=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("parse-structure", help="parse a structure string and print its order")
    p.add_argument("text")
    common(p)
    p.set_defaults(func=cmd_parse_structure)

    p = sub.add_parser("algebraic", help="check the algebraic-group tables")
    p.add_argument("--n-max", type=int)
    common(p)
    p.set_defaults(func=cmd_algebraic)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("n_max", "q_max", "jobs"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_INVALID
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidGroup, UnknownName, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
