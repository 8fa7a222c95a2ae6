"""Batch verification front end.

Subcommands:

* ``verify`` -- run a suite of identity checks over the documented grids and
  emit a JSON report.  Exit code 0 iff no cell failed.
* ``table``  -- render one of the two identity tables (markdown or JSON)
  with sample exact values.
* ``derive`` -- show a jet-seed derivation for one binomial family instance.
* ``limits`` -- run an exact decay probe for a reflection family.

Reports are deterministic: cells are sorted by (record id, parameters, n),
all rationals are serialized as exact ``p/q`` strings, keys are sorted, and
the only run-dependent field is ``generated_at``.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Iterable, Optional

from .exactnum import Dual, format_rational
from .identities import (
    DomainViolation,
    FAMILY_ORDER,
    default_n_max,
    default_param_grid,
    derive_via_d0,
    family_lookup,
    lookup,
    registry,
    xi,
    xi_via_derivative,
)
from .limits import binomial_ratio_weights, decay_probe, reflex_family

__all__ = ["main", "build_report", "render_report", "SUITES"]

SUITES = ("theorems", "table1", "table2", "families", "xi", "all")

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _fmt_scalar(v) -> str:
    if isinstance(v, Dual):
        return f"{format_rational(v.value)} + {format_rational(v.deriv)}*eps"
    return format_rational(v)


def _cell(record_id: str, params: dict, n: int, status: str,
          lhs: Optional[str] = None, rhs: Optional[str] = None,
          reason: Optional[str] = None) -> dict:
    return {
        "record_id": record_id,
        "params": dict(params),
        "n": n,
        "status": status,
        "lhs": lhs,
        "rhs": rhs,
        "reason": reason,
    }


def _effective_top(doc_top: int, n_max: Optional[int], grow: bool) -> int:
    if n_max is None:
        return doc_top
    if grow:
        return n_max
    return min(n_max, doc_top)


def _record_cells(record_ids: Iterable[str], n_max: Optional[int],
                  param_max: Optional[int], grow: bool = False) -> list[dict]:
    cells = []
    for rid in record_ids:
        rec = lookup(rid)
        top = _effective_top(default_n_max(rid), n_max, grow)
        for params in default_param_grid(rid, param_max):
            for n in range(top + 1):
                try:
                    res = rec.check(params, n)
                except DomainViolation as exc:
                    cells.append(_cell(rid, params, n, "skipped", reason=str(exc)))
                    continue
                status = "pass" if res.equal else "fail"
                cells.append(
                    _cell(rid, params, n, status,
                          lhs=_fmt_scalar(res.lhs), rhs=_fmt_scalar(res.rhs))
                )
    return cells


def _family_cells(n_max: Optional[int], param_max: Optional[int],
                  grow: bool = False) -> list[dict]:
    cells = []
    for fid in FAMILY_ORDER:
        fam = family_lookup(fid)
        top = _effective_top(default_n_max(fam.derived_theorem), n_max, grow)
        for params in default_param_grid(fid, param_max):
            for n in range(top + 1):
                try:
                    res = derive_via_d0(fid, params, n)
                except DomainViolation as exc:
                    cells.append(_cell(fid, params, n, "skipped", reason=str(exc)))
                    continue
                status = "pass" if (res.value_match and res.deriv_match) else "fail"
                cells.append(
                    _cell(fid, params, n, status,
                          lhs=_fmt_scalar(res.lhs), rhs=_fmt_scalar(res.rhs))
                )
    return cells


_XI_CLOSED = {
    1: lambda n: Fraction(1),
    2: lambda n: Fraction(0),
    3: lambda n: Fraction((-1) ** n),
    4: lambda n: Fraction((-1) ** n) * Fraction(
        __import__("math").comb(2 * n, n)
    ),
}


def _xi_cells(n_max: Optional[int], grow: bool = False) -> list[dict]:
    top = _effective_top(8, n_max, grow)
    cells = []
    for power in range(1, 7):
        for n in range(top + 1):
            value = xi(power, n)
            via = xi_via_derivative(power, n)
            status = "pass" if value == via else "fail"
            cells.append(
                _cell("xi:jet", {"power": power}, n, status,
                      lhs=_fmt_scalar(via), rhs=_fmt_scalar(value))
            )
    for power, closed in _XI_CLOSED.items():
        for n in range(top + 1):
            if power == 2 and n == 0:
                cells.append(
                    _cell("xi:closed", {"power": power}, n, "skipped",
                          reason="closed form 0 requires n > 0")
                )
                continue
            value = xi(power, n)
            want = closed(n)
            status = "pass" if value == want else "fail"
            cells.append(
                _cell("xi:closed", {"power": power}, n, status,
                      lhs=_fmt_scalar(value), rhs=_fmt_scalar(want))
            )
    for power, rid in ((5, "t2e16"), (6, "t2e17")):
        rec = lookup(rid)
        for n in range(top + 1):
            lhs_sum = sum(rec.lhs_summand(n, k, {}) for k in range(n + 1))
            value = xi(power, n)
            status = "pass" if value == lhs_sum else "fail"
            cells.append(
                _cell("xi:transform", {"power": power}, n, status,
                      lhs=_fmt_scalar(value), rhs=_fmt_scalar(lhs_sum))
            )
    return cells


_SUITE_RECORDS = {
    "theorems": [f"thm{i}" for i in range(1, 13)] + ["wench", "square_hk"],
    "table1": [f"t1e{i}" for i in range(1, 27)],
    "table2": [f"t2e{i}" for i in range(1, 22)] + ["t2e4_closed"],
}


def build_report(suite: str, n_max: Optional[int] = None,
                 param_max: Optional[int] = None,
                 unsafe_large: bool = False) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max is not None and n_max < 0:
        raise ValueError("n-max must be nonnegative")
    if param_max is not None and param_max < 0:
        raise ValueError("param-max must be nonnegative")
    if n_max is not None and n_max > 8 and not unsafe_large:
        raise ValueError(
            "n-max beyond the documented grids needs --unsafe-large"
        )

    grow = unsafe_large and n_max is not None
    cells: list[dict] = []
    wanted = SUITES[:-1] if suite == "all" else (suite,)
    for name in wanted:
        if name in _SUITE_RECORDS:
            cells.extend(_record_cells(_SUITE_RECORDS[name], n_max, param_max, grow))
        elif name == "families":
            cells.extend(_family_cells(n_max, param_max, grow))
        elif name == "xi":
            cells.extend(_xi_cells(n_max, grow))

    cells.sort(key=lambda c: (c["record_id"],
                              json.dumps(c["params"], sort_keys=True),
                              c["n"]))
    summary = {
        "total": len(cells),
        "passed": sum(1 for c in cells if c["status"] == "pass"),
        "failed": sum(1 for c in cells if c["status"] == "fail"),
        "skipped": sum(1 for c in cells if c["status"] == "skipped"),
    }
    return {
        "suite": suite,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "cells": cells,
        "summary": summary,
    }


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _write_out(text: str, out: Optional[str]) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_verify(args) -> int:
    try:
        report = build_report(args.suite, args.n_max, args.param_max, args.unsafe_large)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _write_out(render_report(report), args.out)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    s = report["summary"]
    print(
        f"suite {report['suite']}: {s['passed']} passed, {s['failed']} failed, "
        f"{s['skipped']} skipped",
        file=sys.stderr,
    )
    return EXIT_OK if s["failed"] == 0 else EXIT_FAILURES


def _table_rows(which: int, n_max: int) -> list[dict]:
    ids = _SUITE_RECORDS["table1"] if which == 1 else _SUITE_RECORDS["table2"][:-1]
    rows = []
    for rid in ids:
        rec = lookup(rid)
        values = {}
        ok = True
        for n in range(1, n_max + 1):
            try:
                res = rec.check({}, n)
            except DomainViolation:
                values[str(n)] = None
                continue
            values[str(n)] = format_rational(res.rhs)
            ok = ok and res.equal
        rows.append(
            {
                "id": rid,
                "source": rec.source,
                "description": rec.description,
                "constraint": rec.constraint_doc,
                "values": values,
                "status": "pass" if ok else "fail",
            }
        )
    return rows


def _cmd_table(args) -> int:
    rows = _table_rows(args.which, args.n_max)
    if args.format == "json":
        text = json.dumps({"table": args.which, "rows": rows},
                          indent=2, sort_keys=True) + "\n"
    else:
        ns = [str(n) for n in range(1, args.n_max + 1)]
        header = "| id | value at n=" + " | value at n=".join(ns) + " | status |"
        sep = "|" + "---|" * (len(ns) + 2)
        lines = [header, sep]
        for row in rows:
            vals = [row["values"][n] if row["values"][n] is not None else "(skipped)"
                    for n in ns]
            lines.append("| " + " | ".join([row["id"], *vals, row["status"]]) + " |")
        text = "\n".join(lines) + "\n"
    try:
        _write_out(text, args.out)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if all(r["status"] == "pass" for r in rows) else EXIT_FAILURES


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        name, _, raw = pair.partition("=")
        if not raw:
            raise ValueError(f"bad --param {pair!r}; expected name=value")
        params[name] = int(raw)
    return params


def _cmd_derive(args) -> int:
    try:
        params = _parse_params(args.param)
        fam = family_lookup(args.family)
        res = derive_via_d0(args.family, params, args.n)
    except (KeyError, ValueError, DomainViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"family {fam.id} (parent of {fam.derived_theorem}), "
          f"params {params}, n={args.n}, evaluated at the jet seed 0+eps")
    print(f"  value slot: lhs={format_rational(res.lhs.value)} "
          f"rhs={format_rational(res.rhs.value)} "
          f"match={'yes' if res.value_match else 'NO'}")
    print(f"  deriv slot: lhs={format_rational(res.lhs.deriv)} "
          f"rhs={format_rational(res.rhs.deriv)} "
          f"match={'yes' if res.deriv_match else 'NO'}")
    return EXIT_OK if (res.value_match and res.deriv_match) else EXIT_FAILURES


def _cmd_limits(args) -> int:
    try:
        ys = tuple(int(v) for v in args.ys.split(","))
        fam = reflex_family(args.mu, args.nu)
        weights = binomial_ratio_weights(args.n)
        report = decay_probe(fam, weights, args.n, ys)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"decay probe for {fam.description}, n={args.n}")
    for y, v in zip(report.ys, report.values):
        approx = f"{float(v):.6e}" if v != 0 else "0"
        print(f"  y={y:>8}  S(y) ~ {approx}  (exact value has "
              f"{len(str(v.numerator))}-digit numerator)")
    verdict = "strictly decreasing" if report.monotone_decreasing_magnitude else "NOT decreasing"
    print(f"  magnitude along y: {verdict}")
    if args.out:
        payload = {
            "mu": args.mu,
            "nu": args.nu,
            "n": args.n,
            "ys": list(report.ys),
            "values": [format_rational(v) for v in report.values],
            "monotone_decreasing_magnitude": report.monotone_decreasing_magnitude,
            "final_magnitude": format_rational(report.final_magnitude),
        }
        try:
            _write_out(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
        except OSError as exc:
            print(f"i/o error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if report.monotone_decreasing_magnitude else EXIT_FAILURES


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersum",
        description="exact verification of binomial-harmonic summation identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--param-max", type=int, default=None)
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")
    p_verify.add_argument("--unsafe-large", action="store_true",
                          help="allow n-max beyond the documented grids")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="render an identity table")
    p_table.add_argument("--which", type=int, choices=(1, 2), required=True)
    p_table.add_argument("--n-max", type=int, default=3)
    p_table.add_argument("--format", choices=("markdown", "json"), default="markdown")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_derive = sub.add_parser("derive", help="show a jet-seed derivation")
    p_derive.add_argument("family", help="family id, e.g. chu or wh_2")
    p_derive.add_argument("--n", type=int, required=True)
    p_derive.add_argument("--param", action="append", default=[],
                          metavar="NAME=VALUE")
    p_derive.set_defaults(func=_cmd_derive)

    p_limits = sub.add_parser("limits", help="run an exact decay probe")
    p_limits.add_argument("--mu", type=int, required=True)
    p_limits.add_argument("--nu", type=int, required=True)
    p_limits.add_argument("--n", type=int, required=True)
    p_limits.add_argument("--ys", default="10,100,1000,10000",
                          help="comma-separated strictly increasing probe points")
    p_limits.add_argument("--out", default=None, help="optional JSON output path")
    p_limits.set_defaults(func=_cmd_limits)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
