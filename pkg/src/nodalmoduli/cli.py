"""Command-line front end with deterministic JSON/CSV output.

Every command prints one JSON document (sorted keys) holding the command
name, its inputs, the structured outputs, and any warnings; the scan-type
commands can emit CSV instead.  Rational inputs are accepted only as "p/q"
or integer strings, never decimals.

Exit codes: 0 success; 1 domain error (structured error JSON on stdout);
2 usage error (argparse message on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .curves import NodalCurve, Polarization
from .feasibility import feasible_interval, region_scan
from .gluing import GluingDatum, glued_class, parse_matrix
from .moduli import (
    component_dimension,
    enumerate_components,
    fixed_det_fiber_dimension,
    is_generic_for,
    projective_bundle_dimension,
)
from .rationals import format_rational, parse_rational
from .stability import StabilityHypotheses, check_sufficiency, mk_semistable_test

MAX_CELLS_ENV = "NODAL_MODULI_MAX_CELLS"
DEFAULT_MAX_CELLS = 10**6


def rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def int_range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected 'lo:hi', got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integer bounds in {text!r}") from exc


def _emit(command: str, inputs: dict, outputs: dict, warnings: list[str]) -> None:
    doc = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "warnings": warnings,
    }
    print(json.dumps(doc, sort_keys=True, indent=2))


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    sys.stdout.write(",".join(header) + "\n")
    for row in rows:
        sys.stdout.write(",".join(row) + "\n")


def _cmd_feasible(args) -> int:
    report = feasible_interval(args.r, args.k, args.chi1, args.chi2)
    inputs = {
        "r": str(args.r),
        "k": str(args.k),
        "chi1": str(args.chi1),
        "chi2": str(args.chi2),
    }
    _emit("feasible", inputs, report.to_json(), [])
    return 0


def _cmd_region(args) -> int:
    max_cells = DEFAULT_MAX_CELLS
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is not None:
        try:
            max_cells = int(raw)
        except ValueError:
            raise ValueError(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}")
    rows = region_scan(args.r, args.k, args.chi1, args.chi2, max_cells=max_cells)
    if args.format == "csv":
        csv_rows = []
        for chi1, chi2, ok, interval in rows:
            lo = "" if not ok or interval.lower is None else format_rational(interval.lower)
            hi = "" if not ok or interval.upper is None else format_rational(interval.upper)
            csv_rows.append([str(chi1), str(chi2), "true" if ok else "false", lo, hi])
        _emit_csv(["chi1", "chi2", "feasible", "w1_lo", "w1_hi"], csv_rows)
        return 0
    inputs = {
        "r": str(args.r),
        "k": str(args.k),
        "chi1": f"{args.chi1[0]}:{args.chi1[1]}",
        "chi2": f"{args.chi2[0]}:{args.chi2[1]}",
    }
    cells = [
        {
            "chi1": chi1,
            "chi2": chi2,
            "feasible": ok,
            "w1_interval": interval.to_json(),
        }
        for chi1, chi2, ok, interval in rows
    ]
    _emit("region", inputs, {"cells": cells, "count": len(cells)}, [])
    return 0


def _cmd_components(args) -> int:
    curve = NodalCurve(args.g1, args.g2)
    w = Polarization(args.w1, 1 - args.w1)
    records = enumerate_components(curve, args.r, args.chi, w)
    warnings = []
    if not is_generic_for(args.chi, w):
        warnings.append(
            "non-generic polarization: window boundaries are integers, "
            "both boundary values included"
        )
    if args.format == "csv":
        csv_rows = [
            [str(rec.chi1), str(rec.chi2), str(rec.d1), str(rec.d2), str(rec.dimension)]
            for rec in records
        ]
        _emit_csv(["chi1", "chi2", "d1", "d2", "dimension"], csv_rows)
        return 0
    inputs = {
        "g1": str(args.g1),
        "g2": str(args.g2),
        "r": str(args.r),
        "chi": str(args.chi),
        "w1": format_rational(args.w1),
    }
    outputs = {
        "components": [rec.to_json() for rec in records],
        "count": len(records),
    }
    _emit("components", inputs, outputs, warnings)
    return 0


def _cmd_glue(args) -> int:
    with open(args.matrix, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    sigma = parse_matrix(raw)
    datum = GluingDatum(r=len(sigma), k=None, chi1=args.chi1, chi2=args.chi2, sigma=sigma)
    sheaf, stalk, is_bundle = glued_class(datum)
    inputs = {
        "matrix": str(args.matrix),
        "chi1": str(args.chi1),
        "chi2": str(args.chi2),
    }
    outputs = {
        "r": datum.r,
        "k": datum.k,
        "chi": sheaf.chi,
        "sheaf": sheaf.to_json(),
        "stalk": stalk.to_json(),
        "vector_bundle": is_bundle,
    }
    _emit("glue", inputs, outputs, [])
    return 0


def _cmd_check_sufficiency(args) -> int:
    h = StabilityHypotheses(args.r, args.k, args.chi1, args.chi2, args.g1, args.g2)
    warnings = []
    if args.w1 is not None:
        w = Polarization(args.w1, 1 - args.w1)
    else:
        report = feasible_interval(args.r, args.k, args.chi1, args.chi2)
        if report.sample is None:
            raise ValueError(
                "no compatible polarization exists for this datum; supply --w1"
            )
        w = report.sample
        warnings.append(f"polarization defaulted to w1 = {format_rational(w.w1)}")
    holds, witness = check_sufficiency(h, w, strict=args.strict)
    inputs = {
        "r": str(args.r),
        "k": str(args.k),
        "chi1": str(args.chi1),
        "chi2": str(args.chi2),
        "g1": str(args.g1),
        "g2": str(args.g2),
        "w1": format_rational(w.w1),
        "strict": str(args.strict).lower(),
    }
    outputs = {
        "holds": holds,
        "witness": None if witness is None else witness.to_json(),
        "w": w.to_json(),
        "d1": h.d1,
        "d2": h.d2,
    }
    _emit("check-sufficiency", inputs, outputs, warnings)
    return 0


def _cmd_dims(args) -> int:
    curve = NodalCurve(args.g1, args.g2)
    inputs = {"g1": str(args.g1), "g2": str(args.g2), "r": str(args.r)}
    outputs = {
        "component": component_dimension(curve, args.r),
        "pf_bundle": projective_bundle_dimension(curve, args.r),
        "fixed_det_fiber": fixed_det_fiber_dimension(curve, args.r),
    }
    _emit("dims", inputs, outputs, [])
    return 0


def _cmd_mk_test(args) -> int:
    holds = mk_semistable_test(
        (args.sub_d, args.sub_rk), (args.amb_d, args.amb_rk), args.m, args.k,
        strict=args.strict,
    )
    inputs = {
        "sub_d": str(args.sub_d),
        "sub_rk": str(args.sub_rk),
        "amb_d": str(args.amb_d),
        "amb_rk": str(args.amb_rk),
        "m": str(args.m),
        "k": str(args.k),
        "strict": str(args.strict).lower(),
    }
    _emit("mk-test", inputs, {"holds": holds}, [])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodalmoduli",
        description="Exact feasibility and moduli invariants for sheaves glued "
        "over a two-component nodal curve.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("feasible", help="compatible-polarization interval for a gluing")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chi1", type=int, required=True)
    p.add_argument("--chi2", type=int, required=True)
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(handler=_cmd_feasible)

    p = sub.add_parser("region", help="feasibility over a lattice box of (chi1, chi2)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chi1", type=int_range_arg, required=True, metavar="LO:HI")
    p.add_argument("--chi2", type=int_range_arg, required=True, metavar="LO:HI")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(handler=_cmd_region)

    p = sub.add_parser("components", help="moduli components for (g1, g2, r, chi, w)")
    p.add_argument("--g1", type=int, required=True)
    p.add_argument("--g2", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--w1", type=rational_arg, required=True, metavar="P/Q")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(handler=_cmd_components)

    p = sub.add_parser("glue", help="invariants of the sheaf glued by a matrix")
    p.add_argument("--matrix", required=True, help="JSON file: rows of 'p/q' entries")
    p.add_argument("--chi1", type=int, required=True)
    p.add_argument("--chi2", type=int, required=True)
    p.set_defaults(handler=_cmd_glue)

    p = sub.add_parser(
        "check-sufficiency", help="extremal subsheaf-slope sweep for a gluing"
    )
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chi1", type=int, required=True)
    p.add_argument("--chi2", type=int, required=True)
    p.add_argument("--g1", type=int, required=True)
    p.add_argument("--g2", type=int, required=True)
    p.add_argument("--w1", type=rational_arg, default=None, metavar="P/Q")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(handler=_cmd_check_sufficiency)

    p = sub.add_parser("dims", help="dimension formulas for the moduli space")
    p.add_argument("--g1", type=int, required=True)
    p.add_argument("--g2", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser("mk-test", help="shifted-slope (m,k)-semistability comparison")
    p.add_argument("--sub-d", type=int, required=True)
    p.add_argument("--sub-rk", type=int, required=True)
    p.add_argument("--amb-d", type=int, required=True)
    p.add_argument("--amb-rk", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(handler=_cmd_mk_test)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, sort_keys=True, indent=2))
        return 1


def console_main() -> None:
    sys.exit(main())
