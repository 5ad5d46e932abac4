"""Command-line front end: ``hesscat {gen,det,verify,bench,oeis-check}``.

Exit codes are shared by every subcommand: 0 success or agreement,
1 a verified disagreement or mismatch, 2 a usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time

from .boundaries import BoundaryPair, custom_boundary, fuss_boundary, rational_boundary
from .engines import Engine, DetReport, det_all, determinant
from .exact import format_integer, format_rational
from .hessenberg import BinomialHessenberg, build_path_matrix
from .paths import count_below_line
from .sequences import (
    BFileError,
    EmptyOverlap,
    Route,
    SequenceSpec,
    compare,
    parse_bfile,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_family(p: argparse.ArgumentParser, with_n: bool = True) -> None:
    p.add_argument("--kind", required=True, choices=["catalan", "fuss", "rational", "custom"])
    p.add_argument("--k", type=int, help="slope for --kind fuss")
    p.add_argument("--m", type=int, help="run of the slope r/m for --kind rational")
    p.add_argument("--r", type=int, help="rise of the slope r/m for --kind rational")
    p.add_argument("--a", type=_int_list, help="upper heights for --kind custom, e.g. 0,1,3")
    p.add_argument("--b", type=_int_list, help="lower heights for --kind custom (default zeros)")
    if with_n:
        p.add_argument("--n", type=int, help="instance size (not used by --kind custom)")


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} requires {', '.join(missing)}")


def _boundary(args: argparse.Namespace, n: int | None = None) -> BoundaryPair:
    if args.kind == "custom":
        _need(args, "a")
        b = args.b if args.b is not None else [0] * len(args.a)
        return custom_boundary(args.a, b)
    if n is None:
        _need(args, "n")
        n = args.n
    if args.kind == "catalan":
        return fuss_boundary(1, n)
    if args.kind == "fuss":
        _need(args, "k")
        return fuss_boundary(args.k, n)
    _need(args, "m", "r")
    return rational_boundary(args.m, args.r, n)


def _sequence_spec(args: argparse.Namespace, start: int, stop: int) -> SequenceSpec:
    if args.kind == "catalan":
        return SequenceSpec.catalan(start, stop)
    if args.kind == "fuss":
        _need(args, "k")
        return SequenceSpec.fuss(args.k, start, stop)
    if args.kind == "rational":
        _need(args, "m", "r")
        return SequenceSpec.rational(args.m, args.r, start, stop)
    raise UsageError(f"--kind {args.kind} is not a sequence family")


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL).writerows(rows)
    return buf.getvalue()


def matrix_to_json(M: BinomialHessenberg) -> dict:
    bp = M.source
    return {
        "n": M.n,
        "a": [format_integer(x) for x in bp.a] if bp else None,
        "b": [format_integer(x) for x in bp.b] if bp else None,
        "entries": [[format_integer(x) for x in row] for row in M.entries],
    }


def cmd_gen(args: argparse.Namespace, out) -> int:
    M = build_path_matrix(_boundary(args))
    if args.format == "json":
        out.write(json.dumps(matrix_to_json(M)) + "\n")
    elif args.format == "csv":
        out.write(_csv_text([[format_integer(x) for x in row] for row in M.entries]))
    else:
        width = max((len(str(x)) for row in M.entries for x in row), default=1)
        for row in M.entries:
            out.write(" ".join(str(x).rjust(width) for x in row) + "\n")
    return EXIT_OK


def _report_json(report: DetReport) -> dict:
    return {
        "engine": report.engine.cli_name,
        "value": format_integer(report.value),
        "diagonal": None if report.diagonal is None else [format_rational(d) for d in report.diagonal],
        "fallback": report.fallback,
    }


def cmd_det(args: argparse.Namespace, out) -> int:
    M = build_path_matrix(_boundary(args))
    if args.engine == "all":
        result = det_all(M)
        for report in result.reports.values():
            if report.fallback:
                print(f"warning: elimination {report.fallback}", file=sys.stderr)
        if args.format == "json":
            doc = {
                "reports": {e.cli_name: _report_json(r) for e, r in result.reports.items()},
                "agree": result.agree,
            }
            out.write(json.dumps(doc) + "\n")
        else:
            for engine, report in result.reports.items():
                out.write(f"{engine.cli_name}: {format_integer(report.value)}\n")
            out.write("AGREE\n" if result.agree else "DISAGREE\n")
        return EXIT_OK if result.agree else EXIT_MISMATCH

    report = determinant(M, args.engine)
    if report.fallback:
        print(f"warning: elimination {report.fallback}", file=sys.stderr)
    if args.format == "json":
        out.write(json.dumps(_report_json(report)) + "\n")
    else:
        out.write(format_integer(report.value) + "\n")
        if report.diagonal is not None:
            out.write("diagonal: " + " ".join(format_rational(d) for d in report.diagonal) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    if args.n_max < args.n_min:
        raise UsageError(f"--n-max {args.n_max} is below --n-min {args.n_min}")
    spec = _sequence_spec(args, args.n_min, args.n_max)
    header = ["verdict", "n", "recurrence", "elimination", "fraction-free", "closed-form", "oracle"]
    rows = []
    all_pass = True
    for n in spec.indices:
        M = build_path_matrix(spec.boundary(n))
        dets = det_all(M)
        closed = spec.closed_form(n)
        values = [r.value for r in dets.reports.values()] + [closed]
        if spec.oracle_allowed(n):
            m, r = spec.slope
            oracle = count_below_line(m, r, n).value
            values.append(oracle)
            oracle_cell = format_integer(oracle)
        else:
            oracle_cell = "SKIPPED-ORACLE"
        verdict = "PASS" if len(set(values)) == 1 else "FAIL"
        all_pass &= verdict == "PASS"
        elim = dets.reports[Engine.ELIMINATION]
        rows.append([
            verdict,
            str(n),
            format_integer(dets.reports[Engine.RECURRENCE].value),
            format_integer(elim.value) + ("(fallback)" if elim.fallback else ""),
            format_integer(dets.reports[Engine.FRACTION_FREE].value),
            format_integer(closed),
            oracle_cell,
        ])
    if args.format == "csv":
        out.write(_csv_text([header] + rows))
    else:
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        for row in [header] + rows:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
        passed = sum(r[0] == "PASS" for r in rows)
        out.write(f"{passed}/{len(rows)} instances passed\n")
    return EXIT_OK if all_pass else EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace, out) -> int:
    if args.repetitions < 1:
        raise UsageError("--repetitions must be at least 1")
    engines = [Engine.parse(name) for name in args.engines.split(",") if name.strip()]
    if not engines:
        raise UsageError("--engines is empty")
    M = build_path_matrix(_boundary(args))
    rows = []
    values = set()
    for engine in engines:
        timings = []
        for _ in range(args.repetitions):
            t0 = time.perf_counter()
            report = determinant(M, engine)
            timings.append(time.perf_counter() - t0)
        values.add(report.value)
        rows.append((engine, min(timings), statistics.median(timings), report.value))
    agree = len(values) == 1
    if args.format == "csv":
        table = [["engine", "repetitions", "min_seconds", "median_seconds", "value"]]
        table += [[e.cli_name, str(args.repetitions), f"{lo:.6f}", f"{med:.6f}", format_integer(v)]
                  for e, lo, med, v in rows]
        out.write(_csv_text(table))
    else:
        out.write(f"{'engine':<14} {'min_s':>12} {'median_s':>12}\n")
        for e, lo, med, _ in rows:
            out.write(f"{e.cli_name:<14} {lo:>12.6f} {med:>12.6f}\n")
        if agree:
            out.write(f"value: {format_integer(rows[0][3])}\n")
        else:
            for e, _, _, v in rows:
                out.write(f"value[{e.cli_name}]: {format_integer(v)}\n")
        out.write("AGREE\n" if agree else "DISAGREE\n")
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_oeis_check(args: argparse.Namespace, out) -> int:
    try:
        with open(args.bfile, "rb") as fh:
            bfile = parse_bfile(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.bfile}: {exc.strerror or exc}") from None
    except BFileError as exc:
        raise UsageError(f"{args.bfile}: {exc}") from None
    if not len(bfile):
        raise UsageError(f"{args.bfile}: no data lines")
    start = args.from_ if args.from_ is not None else max(bfile.indices.start - args.align, 0)
    stop = args.to if args.to is not None else bfile.indices.stop - 1 - args.align
    spec = _sequence_spec(args, start, stop)
    try:
        result = compare(spec, bfile, args.align, args.route)
    except EmptyOverlap as exc:
        raise UsageError(str(exc)) from None
    out.write(f"matched: {result.matched}\n")
    out.write(f"mismatches: {len(result.mismatches)}\n")
    for n, expected, actual in result.mismatches:
        out.write(f"mismatch n={n} bfile={format_integer(expected)} computed={format_integer(actual)}\n")
    return EXIT_OK if result.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesscat",
        description="Exact Hessenberg determinants for Catalan-family lattice-path counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print the binomial Hessenberg matrix of an instance")
    _add_family(p)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("det", help="evaluate the determinant of an instance")
    _add_family(p)
    p.add_argument("--engine", default="recurrence",
                   choices=["recurrence", "elimination", "fraction-free", "all"])
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="cross-check determinants, closed forms and path counts")
    _add_family(p, with_n=False)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time determinant engines on one instance")
    _add_family(p)
    p.add_argument("--engines", default="recurrence,elimination,fraction-free")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oeis-check", help="compare a sequence against a local OEIS b-file")
    _add_family(p, with_n=False)
    p.add_argument("--bfile", required=True)
    p.add_argument("--from", dest="from_", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--align", type=int, default=0,
                   help="sequence term n is compared with b-file index n + ALIGN")
    p.add_argument("--route", default="closed_form", type=Route.parse,
                   help="determinant, closed-form or oracle")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"hesscat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # precondition violations from the constructors (BoundaryError etc.)
        print(f"hesscat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
