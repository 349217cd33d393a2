"""Command-line front end.

Subcommands:

* ``triangle``   — compute one triangle and export it (text/json/csv/latex);
* ``verify``     — run identity-verification sweeps over parameter grids;
* ``conjecture`` — run the integer-r summation conjecture checker;
* ``fixtures``   — regenerate the embedded reference triangles and diff;
* ``expand``     — pretty-print one instantiated identity with coefficients.

Exit codes: 0 = all checks pass, 1 = mathematical counterexample found,
2 = usage or parameter error.  The environment variable WEYLSTIR_MAX_N
overrides the hard caps on ``--n`` (default 64 for triangle/expand work,
10 for verification sweeps).
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .fixtures import FIXTURES, check_fixture
from .identities import (
    TEMPLATES,
    TEMPLATE_ORDER,
    VerifyReport,
    templates_matching,
    verify_identity,
)
from .kernels import as_rational
from .triangles import KINDS, build_recurrence, conjecture_check, symbolic_triangle

_TRIANGLE_CAP = 64
_VERIFY_CAP = 10


def _cap(default: int) -> int:
    env = os.environ.get("WEYLSTIR_MAX_N")
    if env is None:
        return default
    try:
        return int(env)
    except ValueError:
        raise argparse.ArgumentTypeError(f"WEYLSTIR_MAX_N is not an integer: {env!r}")


def _rational(text: str) -> Fraction:
    """Rationals are 'p/q' or integer strings; decimal input is rejected."""
    try:
        return as_rational(text.strip())
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _word(text: str) -> Tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'L,R', got {text!r}")
    return (_rational(parts[0]), _rational(parts[1]))


def _int_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected 'a..b', got {text!r}")
    try:
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer bounds in {text!r}")


def _probe_list(text: str) -> Tuple[Fraction, ...]:
    return tuple(_rational(chunk) for chunk in text.split(","))


# ---------------------------------------------------------------------------
# triangle
# ---------------------------------------------------------------------------


def cmd_triangle(args) -> int:
    cap = _cap(_TRIANGLE_CAP)
    if args.n > cap:
        print(f"error: --n {args.n} exceeds the cap {cap} "
              "(override with WEYLSTIR_MAX_N)", file=sys.stderr)
        return 2
    if args.symbolic:
        tri = symbolic_triangle(args.kind, args.n)
    else:
        tri = build_recurrence(args.kind, args.alpha, args.beta, args.r, args.n)
    if args.format == "json":
        print(tri.to_json())
    elif args.format == "csv":
        print(tri.to_csv(), end="")
    elif args.format == "latex":
        print(tri.to_latex())
    else:
        print(tri.to_text())
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _sorted_cells(cells: Sequence[Dict[str, Fraction]]) -> List[Dict[str, Fraction]]:
    return sorted(cells, key=lambda c: tuple(sorted(c.items())))


def _verify_worker(job) -> VerifyReport:
    tid, cell, n_max, s_values = job
    return verify_identity(TEMPLATES[tid], cells=[cell], n_max=n_max, s_values=s_values)


def cmd_verify(args) -> int:
    cap = _cap(_VERIFY_CAP)
    if args.n is not None and args.n > cap:
        print(f"error: --n {args.n} exceeds the cap {cap} "
              "(override with WEYLSTIR_MAX_N)", file=sys.stderr)
        return 2
    if args.all:
        selected = [TEMPLATES[tid] for tid in TEMPLATE_ORDER]
    elif args.template:
        selected = templates_matching(args.template)
        if not selected:
            print(f"error: no template matches {args.template!r}; known ids: "
                  + ", ".join(TEMPLATE_ORDER), file=sys.stderr)
            return 2
    else:
        print("error: pass --template ID (or a prefix) or --all", file=sys.stderr)
        return 2

    reports: List[VerifyReport] = []
    for template in selected:
        if args.range is not None:
            lo, hi = args.range
            values = [Fraction(i) for i in range(lo, hi + 1)]
            cells: List[Dict[str, Fraction]] = [{}]
            for name in template.params:
                cells = [dict(c, **{name: v}) for c in cells for v in values]
        else:
            cells = template.grid()
        cells = _sorted_cells(cells)
        jobs = [(template.id, cell, args.n, args.s) for cell in cells]
        if args.parallel and len(jobs) > 1:
            with multiprocessing.Pool() as pool:
                partials = pool.map(_verify_worker, jobs)
        else:
            partials = [_verify_worker(job) for job in jobs]
        merged = VerifyReport(template_id=template.id)
        for part in partials:
            merged.merge(part)
        reports.append(merged)

    ok = all(r.ok for r in reports)
    if args.format == "json":
        payload = {
            "ok": ok,
            "reports": [
                {
                    "template": r.template_id,
                    "ok": r.ok,
                    "cells": r.cells,
                    "instances": r.instances,
                    "action_probes": r.action_probes,
                    "string_probes": r.string_probes,
                    "failures": r.failures,
                }
                for r in reports
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(r.summary())
        print(f"verify: {'all templates pass' if ok else 'FAILURES found'} "
              f"({len(reports)} template(s))")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# conjecture
# ---------------------------------------------------------------------------


def cmd_conjecture(args) -> int:
    report = conjecture_check(n_max=args.n, r_min=args.r_min, r_max=args.r_max)
    stated = report.mismatches_stated
    trunc = report.mismatches_truncated
    sensitive = report.convention_sensitive
    if args.format == "json":
        payload = {
            "n_max": report.n_max,
            "r_min": report.r_min,
            "r_max": report.r_max,
            "cells": report.total,
            "mismatches_stated_range": len(stated),
            "mismatches_truncated_range": len(trunc),
            "convention_sensitive_cells": len(sensitive),
            "first_mismatches": [
                {
                    "n": c.n, "k": c.k, "r": c.r,
                    "recurrence": str(c.recurrence),
                    "sum_stated": str(c.sum_stated),
                    "sum_truncated": str(c.sum_truncated),
                }
                for c in (stated or trunc)[:10]
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"conjecture check: n <= {report.n_max}, "
              f"r in [{report.r_min}, {report.r_max}]")
        print(f"cells checked:                {report.total}")
        print(f"mismatches (stated range):    {len(stated)}")
        print(f"mismatches (j >= 0 range):    {len(trunc)}")
        print(f"convention-sensitive cells:   {len(sensitive)}")
        for c in (stated or trunc)[:5]:
            print(f"  n={c.n} k={c.k} r={c.r}: recurrence {c.recurrence}, "
                  f"stated {c.sum_stated}, truncated {c.sum_truncated}")
    # This checker reports on an unproven statement; completing the sweep is
    # success regardless of how many cells disagree.
    return 0


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def cmd_fixtures(args) -> int:
    bad = []
    for oeis in FIXTURES:
        ok, diffs = check_fixture(oeis)
        fx = FIXTURES[oeis]
        status = "OK" if ok else "MISMATCH"
        print(f"{oeis} ({fx.name}): {status}")
        bad.extend(diffs)
    for line in bad:
        print("  " + line)
    return 0 if not bad else 1


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------


_PARAM_SOURCES = {
    "L": ("--word", 0),
    "R": ("--word", 1),
    "Lp": ("--wordp", 0),
    "Rp": ("--wordp", 1),
}


def _collect_params(template, args) -> Dict[str, Fraction]:
    cell: Dict[str, Fraction] = {}
    for name in template.params:
        if name in _PARAM_SOURCES:
            flag, idx = _PARAM_SOURCES[name]
            source = args.word if flag == "--word" else args.wordp
            if source is None:
                raise SystemExit2(f"template {template.id!r} needs {flag} L,R")
            cell[name] = source[idx]
        elif name == "alpha":
            if args.alpha is None:
                raise SystemExit2(f"template {template.id!r} needs --alpha")
            cell[name] = args.alpha
        elif name == "r":
            if args.r is None:
                raise SystemExit2(f"template {template.id!r} needs --r")
            cell[name] = args.r
        elif name == "case":
            if args.case is None:
                raise SystemExit2(f"template {template.id!r} needs --case")
            cell[name] = Fraction(args.case)
        elif name == "m":
            if args.m is None:
                raise SystemExit2(f"template {template.id!r} needs --m")
            cell[name] = Fraction(args.m)
    return cell


class SystemExit2(Exception):
    """Usage error carrying its message (mapped to exit code 2)."""


def cmd_expand(args) -> int:
    cap = _cap(_TRIANGLE_CAP)
    if args.n > cap:
        print(f"error: --n {args.n} exceeds the cap {cap} "
              "(override with WEYLSTIR_MAX_N)", file=sys.stderr)
        return 2
    matches = templates_matching(args.template)
    if len(matches) != 1:
        print(f"error: --template must name exactly one template "
              f"(got {len(matches)} matches for {args.template!r})", file=sys.stderr)
        return 2
    template = matches[0]
    try:
        cell = _collect_params(template, args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if template.domain == "WC":
        for name, value in cell.items():
            if name in _PARAM_SOURCES and (value.denominator != 1 or value < 0):
                print(f"error: template {template.id!r} requires natural word "
                      f"parameters; {name}={value} is not admissible", file=sys.stderr)
                return 2
    if args.n < template.n_min:
        print(f"error: template {template.id!r} requires n >= {template.n_min}",
              file=sys.stderr)
        return 2

    instances = template.build(cell, args.n)
    style = "adag" if template.domain == "WC" else "x"
    payload = []
    for inst in instances:
        entry = {
            "template": template.id,
            "params": {k: str(v) for k, v in cell.items()},
            "n": args.n,
            "lhs": inst.lhs.render(style if args.format == "latex" else "x"),
            "rhs": inst.rhs.render(style if args.format == "latex" else "x"),
        }
        if inst.coeffs is not None:
            entry["coefficients"] = [str(c) for c in inst.coeffs]
        if inst.label:
            entry["label"] = inst.label
        payload.append(entry)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for entry in payload:
            label = f" [{entry['label']}]" if "label" in entry else ""
            print(f"{entry['template']}{label}  (n = {entry['n']}"
                  + (", " + ", ".join(f"{k}={v}" for k, v in entry["params"].items())
                     if entry["params"] else "") + ")")
            print(f"  lhs: {entry['lhs']}")
            print(f"  rhs: {entry['rhs']}")
            if "coefficients" in entry:
                print(f"  coefficients for k = 0..{entry['n']}: "
                      f"[{', '.join(entry['coefficients'])}]")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylstir",
        description="Exact generalized Stirling/Eulerian triangles and "
                    "operator ordering identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="compute and export one triangle")
    p_tri.add_argument("--kind", choices=KINDS, default="S")
    p_tri.add_argument("--alpha", type=_rational, default=Fraction(0))
    p_tri.add_argument("--beta", type=_rational, default=Fraction(1))
    p_tri.add_argument("--r", type=_rational, default=Fraction(0))
    p_tri.add_argument("--n", type=int, required=True)
    p_tri.add_argument("--symbolic", action="store_true",
                       help="entries as polynomials in alpha, beta, r")
    p_tri.add_argument("--format", choices=("text", "json", "csv", "latex"),
                       default="text")
    p_tri.set_defaults(func=cmd_triangle)

    p_ver = sub.add_parser("verify", help="verify identity templates on a grid")
    p_ver.add_argument("--template", help="template id or prefix")
    p_ver.add_argument("--all", action="store_true", help="every template once")
    p_ver.add_argument("--range", type=_int_range, default=None, metavar="A..B",
                       help="override the parameter grid with integers A..B")
    p_ver.add_argument("--n", type=int, default=None, help="maximum power n")
    p_ver.add_argument("--s", type=_probe_list, default=None, metavar="S1,S2,...",
                       help="override the monomial probe exponents")
    p_ver.add_argument("--parallel", action="store_true",
                       help="fan cells out across worker processes")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(func=cmd_verify)

    p_con = sub.add_parser("conjecture", help="run the summation conjecture checker")
    p_con.add_argument("--n", type=int, default=10)
    p_con.add_argument("--r-min", dest="r_min", type=int, default=-4)
    p_con.add_argument("--r-max", dest="r_max", type=int, default=6)
    p_con.add_argument("--format", choices=("text", "json"), default="text")
    p_con.set_defaults(func=cmd_conjecture)

    p_fix = sub.add_parser("fixtures", help="regenerate embedded reference rows")
    p_fix.set_defaults(func=cmd_fixtures)

    p_exp = sub.add_parser("expand", help="print one instantiated identity")
    p_exp.add_argument("--template", required=True)
    p_exp.add_argument("--word", type=_word, default=None, metavar="L,R")
    p_exp.add_argument("--wordp", type=_word, default=None, metavar="L,R")
    p_exp.add_argument("--alpha", type=_rational, default=None)
    p_exp.add_argument("--r", type=_rational, default=None)
    p_exp.add_argument("--case", type=int, default=None)
    p_exp.add_argument("--m", type=int, default=None)
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_exp.set_defaults(func=cmd_expand)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
