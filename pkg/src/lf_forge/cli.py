"""Command-line front end.

Exit codes: 0 success (a MISMATCH in ``verify`` is a finding, not a
failure), 1 domain error, 2 usage error. ``LF_FORGE_FORMAT`` sets the
default output format; ``--format`` overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import LFForgeError, NonTrivialMonodromy, RangeTooSmall
from .fibrations import knot_surgered_fibration, x_family
from .meyer import load_word, meyer_tau, parse_matrix, signature_from_word, word_product
from .search import (
    GEOGRAPHY_COLUMNS,
    SOLUTION_COLUMNS,
    geography_emit,
    geography_row,
    nonzero_signature_filter,
    solution_row,
    solve_params,
    verify_corollary,
    write_csv,
)

FORMATS = ("table", "csv", "json")
ENV_FORMAT = "LF_FORGE_FORMAT"


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _default_format() -> str:
    fmt = os.environ.get(ENV_FORMAT, "table").strip().lower() or "table"
    if fmt not in FORMATS:
        raise UsageError(f"{ENV_FORMAT}={fmt!r} is not one of {', '.join(FORMATS)}")
    return fmt


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_table(rows: list[dict], columns, out) -> None:
    cells = [[str(c) for c in columns]] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    for row in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _emit_rows(rows: list[dict], columns, fmt: str, out) -> None:
    if fmt == "csv":
        write_csv(rows, columns, out)
    elif fmt == "json":
        _emit_json([{c: r[c] for c in columns} for r in rows], out)
    else:
        _emit_table(rows, columns, out)


# -- subcommands -------------------------------------------------------------


def cmd_search(args, out) -> int:
    try:
        sols = solve_params(args.h_max, args.k_max, workers=args.workers)
    except RangeTooSmall as exc:
        raise UsageError(str(exc)) from None
    if args.nonzero_only:
        sols = nonzero_signature_filter(sols)
    _emit_rows([solution_row(s) for s in sols], SOLUTION_COLUMNS, args.format, out)
    return 0


def cmd_family(args, out) -> int:
    if args.which == "x":
        desc = x_family(args.h, args.k)
    else:
        desc = knot_surgered_fibration(args.n, args.g)
    row = {
        "label": desc.label,
        "base": desc.base,
        "fiber_genus": desc.fiber_genus,
        "singular_fibers": desc.singular_fibers,
        "all_nonseparating": desc.all_nonseparating,
        "e": desc.total.e,
        "sigma": desc.total.sigma,
        "chi_h": desc.total.chi_h,
        "c1_sq": desc.total.c1_sq,
    }
    if args.format == "json":
        _emit_json(desc.as_dict(), out)
    elif args.format == "csv":
        write_csv([{k: str(v) for k, v in row.items()}], tuple(row), out)
    else:
        width = max(len(k) for k in row)
        for key, value in row.items():
            out.write(f"{key.ljust(width)}  {value}\n")
    return 0


def cmd_verify(args, out) -> int:
    try:
        checks = verify_corollary(args.corollary)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.format == "json":
        _emit_json(
            {
                "corollary": args.corollary,
                "claims": [
                    {
                        "claim": c.claim,
                        "stated": _jsonable(c.stated),
                        "computed": _jsonable(c.computed),
                        "status": c.status,
                    }
                    for c in checks
                ],
            },
            out,
        )
    elif args.format == "csv":
        write_csv(
            [{"claim": c.claim, "stated": c.stated, "computed": c.computed, "status": c.status} for c in checks],
            ("claim", "stated", "computed", "status"),
            out,
        )
    else:
        out.write(f"Corollary {args.corollary}\n")
        for c in checks:
            out.write(f"{c.status:<8}  {c.claim}: stated {c.stated}, computed {c.computed}\n")
        bad = sum(not c.match for c in checks)
        out.write(f"{len(checks) - bad} MATCH, {bad} MISMATCH\n")
    return 0


def _print_matrix(m, fmt, out, key="matrix") -> None:
    if fmt == "json":
        _emit_json({"g": m.g, key: m.tolist()}, out)
    elif fmt == "csv":
        for row in m.tolist():
            out.write(",".join(str(v) for v in row) + "\n")
    else:
        out.write(str(m) + "\n")


def cmd_meyer(args, out) -> int:
    if args.subcmd == "tau":
        try:
            a, b = parse_matrix(args.a), parse_matrix(args.b)
        except ValueError as exc:
            if isinstance(exc, LFForgeError):
                raise
            raise UsageError(f"bad inline matrix: {exc}") from None
        tau = meyer_tau(a, b)
        if args.format == "json":
            _emit_json({"g": a.g, "tau": tau}, out)
        elif args.format == "csv":
            out.write(f"g,tau\n{a.g},{tau}\n")
        else:
            out.write(f"{tau}\n")
        return 0

    try:
        word = load_word(args.word_file)
    except OSError as exc:
        raise LFForgeError(f"cannot read {args.word_file}: {exc.strerror}") from None
    if args.subcmd == "product":
        _print_matrix(word_product(word), args.format, out)
        return 0
    sig = signature_from_word(word)
    if args.format == "json":
        _emit_json({"g": word.g, "twists": len(word), "signature": sig}, out)
    elif args.format == "csv":
        out.write(f"g,twists,signature\n{word.g},{len(word)},{sig}\n")
    else:
        out.write(f"{sig}\n")
    return 0


def cmd_geography(args, out) -> int:
    points = geography_emit(args.h, args.k, args.chi_min, args.chi_max, args.step)
    rows = [geography_row(p) for p in points]
    if args.out is None or args.out == "-":
        _emit_rows(rows, GEOGRAPHY_COLUMNS, "csv" if args.format == "table" else args.format, out)
        return 0
    try:
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, GEOGRAPHY_COLUMNS, fh)
    except OSError as exc:
        raise LFForgeError(f"cannot write {args.out}: {exc.strerror}") from None
    out.write(f"wrote {len(rows)} rows to {args.out}\n")
    return 0


# -- parser ------------------------------------------------------------------


def build_parser(default_format: str = "table") -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lf-forge",
        description="Surface bundles glued from Lefschetz fibrations: invariants, search, Meyer signatures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=default_format, help="output format (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", parents=[fmt], help="enumerate parameter solutions and their bundles")
    p.add_argument("--h-max", type=_positive_int, required=True)
    p.add_argument("--k-max", type=_positive_int, required=True)
    p.add_argument("--nonzero-only", action="store_true", help="drop solutions with zero signature")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("family", parents=[fmt], help="describe one Lefschetz fibration")
    fam = p.add_subparsers(dest="which", required=True)
    px = fam.add_parser("x", parents=[fmt], help="X(h,k)")
    px.add_argument("--h", type=int, required=True)
    px.add_argument("--k", type=int, required=True)
    pe = fam.add_parser("enk", parents=[fmt], help="E(n)_K with a fibered knot of genus g")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[fmt], help="recompute the numbers in a corollary")
    p.add_argument("corollary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("meyer", parents=[fmt], help="signature oracle for Dehn-twist words")
    msub = p.add_subparsers(dest="subcmd", required=True)
    for name, helptext in (("sig", "signature of the fibration"), ("product", "total monodromy matrix")):
        q = msub.add_parser(name, parents=[fmt], help=helptext)
        q.add_argument("word_file")
    q = msub.add_parser("tau", parents=[fmt], help="Meyer cocycle of two symplectic matrices")
    q.add_argument("--a", required=True, help="rows separated by ';', e.g. '1 -1; 0 1'")
    q.add_argument("--b", required=True)
    p.set_defaults(func=cmd_meyer)

    p = sub.add_parser("geography", parents=[fmt], help="(chi_h, c1^2) line samples and lattice points as CSV")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chi-min", type=_fraction, required=True)
    p.add_argument("--chi-max", type=_fraction, required=True)
    p.add_argument("--step", type=_fraction, required=True)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_geography)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        default_format = _default_format()
    except UsageError as exc:
        err.write(f"lf-forge: error: {exc}\n")
        return 2
    parser = build_parser(default_format)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"lf-forge: error: {exc}\n")
        return 2
    except NonTrivialMonodromy as exc:
        err.write(f"lf-forge: {type(exc).__name__}: {exc}\n")
        if exc.product is not None:
            err.write(str(exc.product) + "\n")
        return 1
    except LFForgeError as exc:
        err.write(f"lf-forge: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
