"""Command-line front end: exact Riemann-Roch queries, twisting, genus, the
admissible-invariant tables, extension search, decomposability checks, the
coverage report, and the self-verification suite.

Output is deterministic: identical invocations produce byte-identical
standard output.  Exit codes: 0 success, 1 domain errors, 2 usage errors.
Error paths write nothing to standard output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import constraints, extensions, selfcheck
from .chern import (
    BundleInvariants,
    DomainError,
    HypersurfaceContext,
    chi_bundle,
    chi_line_bundle,
    genus_general,
    twist,
)

SCHEMA_VERSION = 1
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    """Bad flag combinations detected after parsing; exits with code 2."""


def _quadruple(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected k,c1,c2,c3 (got {text!r})")
    try:
        k, c1, c2, c3 = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"quadruple entries must be integers (got {text!r})"
        ) from None
    return (k, c1, c2, c3)


def _canonical_json(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _document(command: str, inputs: dict, results: list) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _columns(rows: list[list[str]]) -> str:
    widths = [max(len(cell) for cell in column) for column in zip(*rows)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def _bundle_dict(inv: BundleInvariants) -> dict:
    return {"k": inv.k, "c1": inv.c1, "c2": inv.c2, "c3": inv.c3}


def _rational_dict(value) -> dict:
    return {
        "numerator": value.numerator,
        "denominator": value.denominator,
        "value": str(value),
    }


def _witness_dict(witness: extensions.ExtensionWitness) -> dict:
    return {
        "left": {"c1": witness.left.c1, "c2": witness.left.c2},
        "right": {"c1": witness.right.c1, "c2": witness.right.c2},
        "result": _bundle_dict(witness.result),
    }


def _load_source(args) -> extensions.Catalog | None:
    if getattr(args, "catalog", None) is None:
        return None
    return extensions.load_catalog(args.catalog)


def _emit(args, command: str, inputs: dict, results: list,
          table_text: str, csv_header: list[str], csv_rows: list[list]) -> str:
    if args.format == "json":
        return _canonical_json(_document(command, inputs, results))
    if args.format == "csv":
        return _csv_text(csv_header, csv_rows)
    return table_text


def cmd_chi(args) -> tuple[str, int]:
    ctx = HypersurfaceContext(args.r)
    if args.line and args.bundle is not None:
        raise UsageError("--line and --bundle are mutually exclusive")
    if args.line:
        if args.a is None:
            raise UsageError("--line needs a twist: -a N")
        value = chi_line_bundle(ctx, args.a)
        inputs = {"r": args.r, "mode": "line", "a": args.a}
        csv_header = ["r", "a", "chi"]
        csv_rows = [[args.r, args.a, str(value)]]
    elif args.bundle is not None:
        if args.a is not None:
            raise UsageError("-a only applies to --line mode")
        inv = BundleInvariants(*args.bundle)
        value = chi_bundle(ctx, inv)
        inputs = {"r": args.r, "mode": "bundle", "bundle": _bundle_dict(inv)}
        csv_header = ["r", "k", "c1", "c2", "c3", "chi"]
        csv_rows = [[args.r, *inv.quadruple(), str(value)]]
    else:
        raise UsageError("chi needs either --line with -a, or --bundle k,c1,c2,c3")
    text = _emit(args, "chi", inputs, [_rational_dict(value)],
                 f"{value}\n", csv_header, csv_rows)
    return text, 0


def cmd_twist(args) -> tuple[str, int]:
    ctx = HypersurfaceContext(args.r)
    inv = BundleInvariants(*args.bundle)
    result = twist(ctx, inv, args.n)
    inputs = {"r": args.r, "bundle": _bundle_dict(inv), "n": args.n}
    table = f"{result.k},{result.c1},{result.c2},{result.c3}\n"
    text = _emit(args, "twist", inputs, [_bundle_dict(result)], table,
                 ["k", "c1", "c2", "c3"], [list(result.quadruple())])
    return text, 0


def cmd_genus(args) -> tuple[str, int]:
    ctx = HypersurfaceContext(args.r)
    inv = BundleInvariants(*args.bundle)
    value = genus_general(ctx, inv)
    inputs = {"r": args.r, "bundle": _bundle_dict(inv)}
    text = _emit(args, "genus", inputs, [_rational_dict(value)], f"{value}\n",
                 ["r", "k", "c1", "c2", "c3", "genus"],
                 [[args.r, *inv.quadruple(), str(value)]])
    return text, 0


def _linear_in_c2(fn, k: int, c1: int) -> str:
    # every per-row formula is linear in c2; read slope and intercept off
    # two evaluations so the rendering cannot drift from the arithmetic
    intercept = fn(k, c1, 0)
    slope = fn(k, c1, 1) - intercept
    if slope == 0:
        return str(intercept)
    head = "c2" if slope == 1 else f"{slope}c2"
    if intercept > 0:
        return f"{head}+{intercept}"
    if intercept < 0:
        return f"{head}-{-intercept}"
    return head


def cmd_enumerate(args) -> tuple[str, int]:
    rows = constraints.enumerate_acm_r4(args.k)
    table_rows = [["k", "c1", "c2", "c3", "g"]]
    csv_rows = []
    results = []
    for row in rows:
        if row.is_empty:
            cells = [str(row.k), str(row.c1), "(empty)", "-", "-"]
        elif len(row.entries) == 1:
            entry = row.entries[0]
            cells = [str(row.k), str(row.c1), str(entry.c2),
                     str(entry.c3), str(entry.genus)]
        else:
            cells = [
                str(row.k),
                str(row.c1),
                f"[{row.interval.lower},{row.interval.upper}]",
                _linear_in_c2(constraints.c3_from_acm, row.k, row.c1),
                _linear_in_c2(constraints.genus_from_acm, row.k, row.c1),
            ]
        table_rows.append(cells)
        for entry in row.entries:
            csv_rows.append([row.k, row.c1, entry.c2, entry.c3, entry.genus])
        results.append({
            "k": row.k,
            "c1": row.c1,
            "lower": row.interval.lower,
            "upper": row.interval.upper,
            "empty": row.is_empty,
            "c2_values": row.c2_values,
            "entries": [
                {"c2": e.c2, "c3": e.c3, "genus": e.genus} for e in row.entries
            ],
            "provenance": list(row.provenance),
        })
    text = _emit(args, "enumerate", {"k": args.k}, results,
                 _columns(table_rows), ["k", "c1", "c2", "c3", "g"], csv_rows)
    return text, 0


_WITNESS_CSV_HEADER = [
    "left_c1", "left_c2", "right_c1", "right_c2", "k", "c1", "c2", "c3",
]


def _witness_csv_row(witness: extensions.ExtensionWitness) -> list:
    return [
        witness.left.c1, witness.left.c2, witness.right.c1, witness.right.c2,
        *witness.result.quadruple(),
    ]


def cmd_extensions(args) -> tuple[str, int]:
    source = _load_source(args)
    witnesses = extensions.extension_quadruples(
        args.r, require_star=(args.pool == extensions.POOL_STAR), source=source
    )
    table_rows = [["left", "right", "result"]]
    for witness in witnesses:
        table_rows.append([str(witness.left), str(witness.right), str(witness.result)])
    inputs = {"r": args.r, "pool": args.pool, "catalog": args.catalog}
    text = _emit(args, "extensions", inputs,
                 [_witness_dict(w) for w in witnesses], _columns(table_rows),
                 _WITNESS_CSV_HEADER, [_witness_csv_row(w) for w in witnesses])
    return text, 0


def cmd_decompose(args) -> tuple[str, int]:
    source = _load_source(args)
    target = BundleInvariants(*args.target)
    witnesses = extensions.decompose(args.r, target, args.pool, source=source)
    if not witnesses and args.expect_witness:
        raise DomainError(f"no decomposition of {target} over the {args.pool} pool")
    if witnesses:
        table = "".join(f"{w.left}+{w.right} -> {w.result}\n" for w in witnesses)
    else:
        table = "no decomposition\n"
    inputs = {
        "r": args.r,
        "target": _bundle_dict(target),
        "pool": args.pool,
        "expect_witness": args.expect_witness,
        "catalog": args.catalog,
    }
    text = _emit(args, "decompose", inputs,
                 [_witness_dict(w) for w in witnesses], table,
                 _WITNESS_CSV_HEADER, [_witness_csv_row(w) for w in witnesses])
    return text, 0


def cmd_coverage(args) -> tuple[str, int]:
    source = _load_source(args)
    report = extensions.coverage_report(args.k, source=source)
    table_rows = [["k", "c1", "c2", "c3", "g", "status", "origin"]]
    csv_rows = []
    results = []
    for item in report.items:
        inv = item.invariants
        table_rows.append([
            str(inv.k), str(inv.c1), str(inv.c2), str(inv.c3), str(item.genus),
            item.status, item.origin or "-",
        ])
        csv_rows.append([*inv.quadruple(), item.genus, item.status, item.origin])
        results.append({
            "k": inv.k,
            "c1": inv.c1,
            "c2": inv.c2,
            "c3": inv.c3,
            "genus": item.genus,
            "status": item.status,
            "origin": item.origin,
            "witnesses": [
                {
                    "left": {"c1": w.left.c1, "c2": w.left.c2},
                    "right": {"c1": w.right.c1, "c2": w.right.c2},
                }
                for w in item.witnesses
            ],
        })
    inputs = {"k": args.k, "catalog": args.catalog}
    text = _emit(args, "coverage", inputs, results, _columns(table_rows),
                 ["k", "c1", "c2", "c3", "g", "status", "origin"], csv_rows)
    return text, 0


def cmd_selfcheck(args) -> tuple[str, int]:
    results = selfcheck.run_all()
    failed = [r for r in results if not r.passed]
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name} ({r.detail})")
        else:
            lines.append(f"FAIL {r.name}: {r.detail}")
    lines.append(f"{len(results)} checks: {len(results) - len(failed)} passed, "
                 f"{len(failed)} failed")
    table = "\n".join(lines) + "\n"
    json_results = [
        {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    csv_rows = [
        [r.name, "true" if r.passed else "false", r.detail] for r in results
    ]
    text = _emit(args, "selfcheck", {}, json_results, table,
                 ["name", "passed", "detail"], csv_rows)
    return text, 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acmbundles",
        description=(
            "Exact Chern-class calculus and the admissible-invariant tables "
            "for ACM bundles on low-degree hypersurfaces in P^4."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="table",
                       help="output format (default: table)")
        p.add_argument("--catalog", metavar="FILE", default=None,
                       help="rank-two catalog override file")

    p = sub.add_parser("chi", help="Euler characteristic of a line bundle or quadruple")
    p.add_argument("--r", type=int, required=True, help="hypersurface degree")
    p.add_argument("--line", action="store_true", help="line-bundle mode: evaluate O(a)")
    p.add_argument("-a", type=int, default=None, help="twist for --line mode")
    p.add_argument("--bundle", type=_quadruple, default=None, metavar="K,C1,C2,C3")
    common(p)
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser("twist", help="invariants of E(n)")
    p.add_argument("--r", type=int, required=True, help="hypersurface degree")
    p.add_argument("--bundle", type=_quadruple, required=True, metavar="K,C1,C2,C3")
    p.add_argument("-n", type=int, required=True, help="twist amount")
    common(p)
    p.set_defaults(handler=cmd_twist)

    p = sub.add_parser("genus", help="genus of the dependency-locus curve")
    p.add_argument("--r", type=int, required=True, help="hypersurface degree")
    p.add_argument("--bundle", type=_quadruple, required=True, metavar="K,C1,C2,C3")
    common(p)
    p.set_defaults(handler=cmd_genus)

    p = sub.add_parser("enumerate", help="admissible invariants table for rank k")
    p.add_argument("--k", type=int, required=True, help="rank (refined for 3 and 4)")
    common(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("extensions", help="rank-four extensions of catalog pairs")
    p.add_argument("--r", type=int, required=True, help="hypersurface degree")
    p.add_argument("--pool", choices=(extensions.POOL_STAR, extensions.POOL_NORMALIZED),
                   default=extensions.POOL_STAR,
                   help="catalog pool (default: star)")
    common(p)
    p.set_defaults(handler=cmd_extensions)

    p = sub.add_parser("decompose", help="find catalog pairs realizing a quadruple")
    p.add_argument("--r", type=int, required=True, help="hypersurface degree")
    p.add_argument("--target", type=_quadruple, required=True, metavar="K,C1,C2,C3")
    p.add_argument("--pool", choices=(extensions.POOL_STAR, extensions.POOL_NORMALIZED),
                   default=extensions.POOL_STAR,
                   help="catalog pool (default: star)")
    p.add_argument("--expect-witness", action="store_true",
                   help="exit 1 if no decomposition exists")
    common(p)
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("coverage", help="realized/open labels for the rank-k table")
    p.add_argument("--k", type=int, required=True, help="rank (3 or 4)")
    common(p)
    p.set_defaults(handler=cmd_coverage)

    p = sub.add_parser("selfcheck", help="run the cross-module invariant suite")
    common(p)
    p.set_defaults(handler=cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text, code = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


def entrypoint() -> None:
    raise SystemExit(main())
