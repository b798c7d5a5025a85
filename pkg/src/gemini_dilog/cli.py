"""Command-line front end.

One binary with subcommands for special-function evaluation, the named
constant table, catalog verification, gemini-function geometry and CSV
plot-data emission.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import io
import json
import os
import sys

import numpy as np

from . import analysis, catalog, gemini, geometry, polylog

_EVAL_FNS = ("li2", "li2c", "li3", "chi2", "cl2", "trigamma", "unit-circle")
_PLOT_SERIES = ("r-of-a", "atot-p", "geminoid-profile")


def _fmt(x: float) -> str:
    """15-decimal fixed-point format, scientific outside a sane range.

    Rounds the shortest decimal representation (repr) half-even so that
    exact closed forms print their canonical digit strings.
    """
    if x == 0.0:
        return "0.000000000000000"
    if not (1e-6 <= abs(x) < 1e7):
        return f"{x:.15e}"
    d = decimal.Decimal(repr(x)).quantize(decimal.Decimal("1e-15"),
                                          rounding=decimal.ROUND_HALF_EVEN)
    return format(d, "f")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt(z.real)
    sign = "-" if z.imag < 0.0 else "+"
    return f"{_fmt(z.real)} {sign} {_fmt(abs(z.imag))} i"


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gemini-dilog",
        description="Gemini-function and dilogarithm identity toolkit.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a special function")
    pe.add_argument("fn", choices=_EVAL_FNS)
    pe.add_argument("args", nargs="+", help="function arguments")

    pc = sub.add_parser("constants", help="print the named-constant table")
    pc.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pv = sub.add_parser("verify", help="verify the identity catalog")
    pv.add_argument("--group", default=None, help="restrict to one group (G1..G14)")
    pv.add_argument("--id", dest="entry_id", default=None, help="restrict to one entry id")
    pv.add_argument("--tol", type=float, default=1e-9, help="tolerance (default 1e-9)")
    pv.add_argument("--seed", type=int, default=42,
                    help="sampling seed (default 42; GEMINI_DILOG_SEED overrides)")
    pv.add_argument("--strict", action="store_true",
                    help="flagged-discrepancy entries also fail the run")
    pv.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pa = sub.add_parser("area", help="area decomposition of a gemini function")
    pa.add_argument("a", type=float)
    pa.add_argument("--b", type=float, default=1.0)
    pa.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pm = sub.add_parser("median", help="median abscissa ln(m) of a gemini function")
    pm.add_argument("a", type=float)

    pvol = sub.add_parser("volume", help="geminoid volume 2*pi*b^3*[zeta(3)-Li3(-a)]")
    pvol.add_argument("a", type=float)
    pvol.add_argument("--b", type=float, default=1.0)

    pmom = sub.add_parser("moment", help="raw moment Gamma(s+1)*zeta(s+2)")
    pmom.add_argument("s", type=float)

    pp = sub.add_parser("plot-data", help="emit a CSV data series")
    pp.add_argument("series", choices=_PLOT_SERIES)
    pp.add_argument("--points", type=int, default=200)
    return p


def _eval_command(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    fn, args = ns.fn, ns.args
    try:
        if fn == "li2":
            _need(parser, args, 1)
            print(_fmt_complex(polylog.li2_real(float(args[0]))))
        elif fn == "li2c":
            _need(parser, args, 2)
            print(_fmt_complex(polylog.li2_complex(complex(float(args[0]), float(args[1])))))
        elif fn == "li3":
            _need(parser, args, 1)
            print(_fmt(polylog.li3_real(float(args[0]))))
        elif fn == "chi2":
            _need(parser, args, 1)
            print(_fmt(polylog.chi2(float(args[0]))))
        elif fn == "cl2":
            _need(parser, args, 1)
            print(_fmt(polylog.clausen_cl2(float(args[0]))))
        elif fn == "trigamma":
            _need(parser, args, 1)
            print(_fmt(polylog.trigamma(float(args[0]))))
        else:  # unit-circle
            _need(parser, args, 2)
            print(_fmt_complex(polylog.li2_unit_circle(int(args[0]), int(args[1]))))
    except ValueError as exc:
        parser.error(str(exc))
    return 0


def _need(parser: argparse.ArgumentParser, args: list, n: int) -> None:
    if len(args) != n:
        parser.error(f"expected {n} argument(s), got {len(args)}")


def _constants_rows() -> list:
    rows = []
    for c in analysis.constants_table():
        rows.append({
            "id": c.id,
            "value": analysis.solve_constant(c),
            "reference": c.reference_value,
            "equation": c.defining_equation,
            "provenance": c.provenance,
        })
    return rows


def _print_table(rows: list, columns: list, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    if fmt == "csv":
        out = io.StringIO()
        w = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        sys.stdout.write(out.getvalue())
        return
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
    print("  ".join(c.ljust(widths[c]) for c in columns))
    for r in rows:
        print("  ".join(str(r[c]).ljust(widths[c]) for c in columns))


def _constants_command(ns: argparse.Namespace) -> int:
    rows = _constants_rows()
    display = [dict(r, value=_fmt(r["value"]), reference=_fmt(r["reference"]))
               for r in rows]
    if ns.format == "json":
        _print_table(rows, [], "json")
    else:
        _print_table(display, ["id", "value", "reference", "equation", "provenance"],
                     ns.format)
    return 0


def _verify_command(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    seed = ns.seed
    env_seed = os.environ.get("GEMINI_DILOG_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            parser.error(f"GEMINI_DILOG_SEED is not an integer: {env_seed!r}")
    if ns.group is not None and not any(
        e.group == ns.group for e in catalog.builtin_catalog()
    ):
        parser.error(f"unknown group: {ns.group}")
    if ns.entry_id is not None and not any(
        e.id == ns.entry_id for e in catalog.builtin_catalog()
    ):
        parser.error(f"unknown entry id: {ns.entry_id}")

    reports = catalog.verify_all(group=ns.group, entry_id=ns.entry_id,
                                 tol=ns.tol, seed=seed)
    rows = [{
        "id": r.id,
        "group": r.group,
        "samples": r.samples,
        "max_abs_residual": r.max_abs_residual,
        "worst_params": r.worst_params,
        "status": r.status,
        "tol": r.tol,
    } for r in reports]

    if ns.format == "json":
        print(json.dumps(rows, indent=2))
    elif ns.format == "csv":
        flat = [dict(r, worst_params=";".join(
            f"{k}={v!r}" for k, v in r["worst_params"].items())) for r in rows]
        _print_table(flat, ["id", "group", "samples", "max_abs_residual",
                            "worst_params", "status", "tol"], "csv")
    else:
        for r in rows:
            print(f"{r['id']:36s} {r['group']:4s} {r['status']:20s} "
                  f"max|res|={r['max_abs_residual']:.3e} "
                  f"tol={r['tol']:.0e} samples={r['samples']}")
        n_fail = sum(1 for r in rows if r["status"] == "fail")
        n_flag = sum(1 for r in rows if r["status"].startswith("flagged"))
        print(f"{len(rows)} entries: {len(rows) - n_fail - n_flag} pass, "
              f"{n_flag} flagged, {n_fail} fail")

    failed = any(r.status == "fail" for r in reports)
    if ns.strict:
        failed = failed or any(r.status == "flagged-discrepancy" for r in reports)
    return 1 if failed else 0


def _area_command(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        d = gemini.area_decomposition(ns.a)
    except ValueError as exc:
        parser.error(str(exc))
    b2 = ns.b * ns.b
    row = {
        "total": d.total * b2,
        "middle_square": d.middle_square * b2,
        "apex": d.apex * b2,
        "rectangle": d.rectangle * b2,
        "between_limits": d.between_limits * b2,
    }
    if ns.format == "json":
        print(json.dumps(row, indent=2))
    elif ns.format == "csv":
        cols = list(row)
        _print_table([{k: _fmt(v) for k, v in row.items()}], cols, "csv")
    else:
        for k, v in row.items():
            print(f"{k} = {_fmt(v)}")
    return 0


def _plot_command(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    n = ns.points
    if n < 2:
        parser.error("--points must be at least 2")
    w = csv.writer(sys.stdout, lineterminator="\n")
    if ns.series == "r-of-a":
        w.writerow(["a", "r"])
        for a in -1.0 + (101.0 - 1e-2) * np.geomspace(1e-4, 1.0, n):
            w.writerow([f"{a:.15g}", f"{gemini.area_ratio_r(a):.15g}"])
    elif ns.series == "atot-p":
        w.writerow(["p", "A"])
        for p in np.geomspace(1.1, 10.0, n):
            w.writerow([f"{p:.15g}", f"{gemini.A_of_p(float(p)):.15g}"])
    else:  # geminoid-profile
        w.writerow(["x", "kappa1", "arc_length", "theta", "R1", "R2",
                    "gauss_curvature"])
        for x in np.geomspace(0.05, 5.0, n):
            pr = geometry.curvature_profile(float(x))
            w.writerow([f"{v:.15g}" for v in
                        (pr.x, pr.kappa1, pr.arc_length, pr.theta, pr.R1, pr.R2,
                         pr.gauss_curvature)])
    return 0


def run(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "eval":
            return _eval_command(ns, parser)
        if ns.command == "constants":
            return _constants_command(ns)
        if ns.command == "verify":
            return _verify_command(ns, parser)
        if ns.command == "area":
            return _area_command(ns, parser)
        if ns.command == "median":
            print(_fmt(gemini.median(ns.a)))
            return 0
        if ns.command == "volume":
            print(_fmt(geometry.geminoid_volume(gemini.GeminiParams(ns.a, ns.b))))
            return 0
        if ns.command == "moment":
            print(_fmt(geometry.raw_moment(ns.s)))
            return 0
        if ns.command == "plot-data":
            return _plot_command(ns, parser)
    except ValueError as exc:
        parser.error(str(exc))
    parser.error("unknown command")
    return 2


def main() -> None:
    sys.exit(run())
