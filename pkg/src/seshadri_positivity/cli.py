"""Command-line front end.

    seshadri-positivity compute FILE [--explain] [--json] [--eta Q] [--emit-spec]
    seshadri-positivity catalog list [--json]
    seshadri-positivity catalog run NAME [--PARAM VALUE ...] [compute flags]
    seshadri-positivity verify-paper [--only NAME] [--json] [--mutate ENTRY A B TARGET VALUE]

Exit codes: 0 success, 1 computation failure, failed verification or unknown
catalog entry, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import catalog
from .delta import VarietyData, delta_at, delta_poly, delta_terms
from .exactmath import as_rational, format_rational
from .seshadri import decide_bigness
from .serialize import (
    SpecError,
    dumps,
    load_variety,
    poly_to_json,
    seshadri_to_json,
    series_to_json,
    variety_to_spec,
    verdict_to_json,
)
from .verification import Mutation, verify_all

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def compute_report(v: VarietyData, eta=None, explain: bool = False) -> dict:
    """Everything ``compute`` prints, as a JSON-ready dictionary."""
    poly = delta_poly(v).poly
    report = {
        "name": v.name,
        "k": v.k,
        "y": v.y,
        "chow": v.chow.describe(),
        "degree": format_rational(v.degree),
        "normal": series_to_json(v.normal),
        "delta": {"coeffs": poly_to_json(poly), "pretty": poly.pretty()},
        "seshadri": None,
        "verdict": None,
    }
    if v.seshadri is not None:
        report["seshadri"] = seshadri_to_json(v.seshadri)
        report["delta_at_seshadri"] = format_rational(delta_at(v, v.seshadri.value))
        report["verdict"] = verdict_to_json(decide_bigness(poly, v.seshadri, projective=v.projective))
    if eta is not None:
        report["eta"] = {"eta": format_rational(eta), "delta": format_rational(poly(eta))}
    if explain:
        report["explain"] = [
            {key: (format_rational(val) if key in ("segre_integral", "coefficient") else val) for key, val in row.items()}
            for row in delta_terms(v)
        ]
    return report


def render_text(report: dict) -> str:
    lines = [
        f"variety:  {report['name']}",
        f"          k = {report['k']}, y = {report['y']}, Chow ring: {report['chow']}",
        f"degree:   {report['degree']}",
        f"delta:    {report['delta']['pretty']}",
    ]
    if "explain" in report:
        lines.append("  t  C(k-2,t)  segre order  A power  int s(N) A^p  coefficient of eta^t")
        for row in report["explain"]:
            lines.append(
                f"  {row['t']:<2} {row['binomial']:<9} {row['segre_order']:<12} {row['polarization_power']:<8}"
                f" {row['segre_integral']:<13} {row['coefficient']}"
            )
    if "eta" in report:
        lines.append(f"delta({report['eta']['eta']}) = {report['eta']['delta']}")
    info = report["seshadri"]
    if info is None:
        lines.append("seshadri: not given, no verdict")
        return "\n".join(lines)
    kind, value = next(iter(info.items()))
    label = "epsilon =" if kind == "exact" else "epsilon >="
    lines.append(f"seshadri: {label} {value}")
    lines.append(f"delta at {value}: {report['delta_at_seshadri']}")
    verdict = report["verdict"]
    line = f"verdict:  {verdict['verdict']}"
    if verdict["verdict"] == "big":
        line += f" (delta({verdict['witness']}) = {verdict['value']})"
    elif verdict["verdict"] == "inconclusive":
        line += f" (no positive value on (0, {verdict['checked_up_to']}))"
    lines.append(line)
    if verdict.get("annotation"):
        lines.append(f"note:     {verdict['annotation']}")
    return "\n".join(lines)


def _emit(v: VarietyData, args) -> int:
    if args.emit_spec:
        print(dumps(variety_to_spec(v)))
        return EXIT_OK
    eta = None
    if args.eta is not None:
        try:
            eta = as_rational(args.eta)
        except (TypeError, ValueError) as exc:
            raise InputError(f"--eta: {exc}") from None
    try:
        report = compute_report(v, eta, args.explain)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(dumps(report) if args.json else render_text(report))
    return EXIT_OK


def cmd_compute(args) -> int:
    v = load_variety(args.file)
    return _emit(v, args)


def _parse_entry_params(entry: catalog.CatalogEntry, extra: Sequence[str]) -> dict:
    params = {}
    known = {p.name for p in entry.params}
    it = iter(extra)
    for token in it:
        if not token.startswith("--"):
            raise InputError(f"unexpected argument {token!r}")
        key, eq, value = token[2:].partition("=")
        if not eq:
            value = next(it, None)
            if value is None:
                raise InputError(f"--{key} needs a value")
        if key not in known:
            raise InputError(f"{entry.name}: unknown parameter --{key}; expected one of {sorted(known) or 'none'}")
        params[key] = value
    return params


def cmd_catalog(args, extra: Sequence[str]) -> int:
    if args.action == "list":
        if extra:
            raise InputError(f"unexpected arguments {list(extra)}")
        rows = []
        for name in catalog.names():
            entry = catalog.get(name)
            rows.append(
                {
                    "name": name,
                    "summary": entry.summary,
                    "params": [{"name": p.name, "type": p.kind, "default": p.default, "doc": p.doc} for p in entry.params],
                    "expected": [x.source for x in entry.expected(entry.resolve())],
                }
            )
        if args.json:
            for row in rows:
                print(dumps(row))
        else:
            for row in rows:
                params = " ".join(f"--{p['name']} {p['type']} (default {_show(p['default'])})" for p in row["params"])
                print(f"{row['name']:<22} {row['summary']}")
                if params:
                    print(f"{'':<22} params: {params}")
                for source in row["expected"]:
                    print(f"{'':<22} checks: {source}")
        return EXIT_OK
    if args.name is None:
        raise InputError("catalog run needs an entry name")
    try:
        entry = catalog.get(args.name)
    except catalog.UnknownEntry as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    params = _parse_entry_params(entry, extra)
    try:
        v = entry.build(params)
    except catalog.BadParams as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return _emit(v, args)


def _show(value) -> str:
    return ",".join(map(str, value)) if isinstance(value, tuple) else str(value)


def cmd_verify(args) -> int:
    mutation = None
    if args.mutate:
        entry, a, b, target, value = args.mutate
        try:
            catalog.get(entry)
            mutation = Mutation(entry, a, b, target, as_rational(value))
        except (catalog.UnknownEntry, TypeError, ValueError) as exc:
            raise InputError(f"--mutate: {exc}") from None
    try:
        report = verify_all(only=args.only, mutation=mutation, properties=not args.no_properties)
    except catalog.UnknownEntry as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.json:
        for line in report.json_lines():
            print(line)
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        allow_abbrev=False,
        prog="seshadri-positivity",
        description="Exact bigness tests for submanifolds of polarized manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def compute_flags(p):
        p.add_argument("--explain", action="store_true", help="print the per-t breakdown of the delta polynomial")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--eta", help="also evaluate delta at this rational, e.g. 1/3")
        p.add_argument("--emit-spec", action="store_true", help="print a description file that rebuilds the variety")

    p = sub.add_parser("compute", allow_abbrev=False, help="compute delta and the verdict for a JSON description")
    p.add_argument("file")
    compute_flags(p)

    p = sub.add_parser("catalog", allow_abbrev=False, help="list or run built-in examples")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("name", nargs="?")
    compute_flags(p)

    p = sub.add_parser("verify-paper", allow_abbrev=False, help="recompute every catalogued value and run the property suites")
    p.add_argument("--only", action="append", metavar="NAME", help="restrict to one entry (repeatable)")
    p.add_argument("--json", action="store_true", help="JSON lines, one per check")
    p.add_argument("--no-properties", action="store_true", help="skip the randomized property suites")
    p.add_argument(
        "--mutate",
        nargs=5,
        metavar=("ENTRY", "A", "B", "TARGET", "VALUE"),
        help="overwrite the structure constant A*B -> TARGET in ENTRY's ring before verifying",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    try:
        if args.command == "catalog":
            return cmd_catalog(args, extra)
        if extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        if args.command == "compute":
            return cmd_compute(args)
        return cmd_verify(args)
    except (SpecError, InputError) as exc:
        for line in str(exc).splitlines():
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
