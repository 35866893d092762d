"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch, 2 usage error, 3 time budget
exhausted (partial output is still written).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .alpha import (
    AlphaQuery,
    BudgetExceeded,
    DegreeCapExhausted,
    alpha_bruteforce,
    alpha_symbolic,
    alpha_table,
    table_csv,
)
from .ideal import Monomial, SquarefreeMonomialIdeal, bipyramid_ideal, lightest_prime, symbolic_membership
from .simplicial import SimplicialComplex, build_bipyramid, facet_complement_primes, minimal_nonfaces
from .verify import verify_bipyramid
from .waldschmidt import DEFAULT_M_MAX, fmt, gamma_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "SRPOWERS_BUDGET"


def labels_line(n: int) -> str:
    return f"# labels: 0 = upper apex, 1..{n} = base cycle, {n + 1} = lower apex"


def format_set(s, n: int | None = None) -> str:
    if n is not None:
        apex = [v for v in s if v in (0, n + 1)]
        base = [v for v in s if v not in (0, n + 1)]
        if len(apex) == 1:
            return "{%d}∪{%s}" % (apex[0], ",".join(map(str, base)))
    return "{%s}" % ",".join(map(str, s))


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "records"), default="text")
    common.add_argument("--jobs", type=_positive_int, default=1)
    common.add_argument("--budget", type=_positive_float, default=None,
                        help=f"wall-clock seconds; defaults to ${BUDGET_ENV} if set")
    common.add_argument("--debug-lp", action="store_true", help="dump simplex tableaus to stderr")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--bipyramid", type=int, metavar="N")
    group.add_argument("--ideal", type=Path, metavar="FILE")
    group.add_argument("--complex", type=Path, metavar="FILE")

    parser = argparse.ArgumentParser(
        prog="srpowers",
        description="Stanley-Reisner ideals, symbolic powers and Waldschmidt constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("complex", parents=[common, source], help="facets, minimal non-faces, facet complements")
    sub.add_parser("ideal", parents=[common, source], help="generators and minimal primes")
    p = sub.add_parser("membership", parents=[common, source], help="is a monomial in I^(m)")
    p.add_argument("--monomial", required=True, help='e.g. "0:3 3:2 5:1"')
    p.add_argument("-m", type=_positive_int, required=True)
    p = sub.add_parser("alpha", parents=[common, source], help="initial degree of I^(m)")
    p.add_argument("-m", type=_positive_int, required=True)
    p.add_argument("--bruteforce", action="store_true", help="use the enumeration oracle")
    p = sub.add_parser("gamma", parents=[common, source], help="Waldschmidt constant")
    p.add_argument("--m-max", type=int, default=0,
                   help=f"also tabulate alpha(m)/m for m <= M (report default {DEFAULT_M_MAX})")
    p.add_argument("--s-max", type=_positive_int, default=None)
    p = sub.add_parser("table", parents=[common], help="alpha over a grid of bipyramids")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=_positive_int, default=6)
    p = sub.add_parser("verify", parents=[common], help="check the bipyramid formulas")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--s-max", type=int, default=3)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if getattr(args, "bipyramid", None) is not None and args.bipyramid < 3:
        parser.error(f"--bipyramid: need N >= 3, got {args.bipyramid}")
    if args.command == "table":
        if args.n_min < 3:
            parser.error(f"--n-min: need N >= 3, got {args.n_min}")
        if args.n_max < args.n_min:
            parser.error("--n-max: must be at least --n-min")
    if args.command == "verify":
        if args.n_max < 3:
            parser.error(f"--n-max: need N >= 3, got {args.n_max}")
        if args.s_max < 1:
            parser.error(f"--s-max: need S >= 1, got {args.s_max}")
    if args.command == "gamma" and args.m_max < 0:
        parser.error("--m-max: must be non-negative")
    if args.command in ("complex",) and args.ideal is not None:
        parser.error("--ideal: the complex command needs --bipyramid or --complex")
    if args.budget is None and os.environ.get(BUDGET_ENV):
        try:
            args.budget = _positive_float(os.environ[BUDGET_ENV])
        except (ValueError, argparse.ArgumentTypeError):
            parser.error(f"${BUDGET_ENV}: expected a positive number")


def _load_ideal(parser, args) -> tuple[SquarefreeMonomialIdeal, int | None]:
    try:
        if args.bipyramid is not None:
            return bipyramid_ideal(args.bipyramid), args.bipyramid
        if args.ideal is not None:
            return SquarefreeMonomialIdeal.from_text(args.ideal.read_text()), None
        return SquarefreeMonomialIdeal.from_complex(SimplicialComplex.from_text(args.complex.read_text())), None
    except (OSError, ValueError) as exc:
        parser.error(f"--{'ideal' if args.ideal else 'complex'}: {exc}")


def _emit(out, records: list[dict]) -> None:
    for r in records:
        out.write(json.dumps(r, sort_keys=True) + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    trace = (lambda text: err.write(text + "\n")) if args.debug_lp else None
    deadline = time.monotonic() + args.budget if args.budget else None
    try:
        return _dispatch(parser, args, out, trace, deadline)
    except SystemExit as exc:
        return int(exc.code)
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET


def _dispatch(parser, args, out, trace, deadline) -> int:
    cmd = args.command
    if cmd == "complex":
        return _cmd_complex(parser, args, out)
    if cmd == "table":
        return _cmd_table(args, out)
    if cmd == "verify":
        return _cmd_verify(args, out)
    ideal, n = _load_ideal(parser, args)
    if cmd == "ideal":
        return _cmd_ideal(args, out, ideal, n)
    if cmd == "membership":
        return _cmd_membership(parser, args, out, ideal, n)
    if cmd == "alpha":
        return _cmd_alpha(args, out, ideal, n, trace, deadline)
    return _cmd_gamma(args, out, ideal, n, trace)


def _cmd_complex(parser, args, out) -> int:
    if args.bipyramid is not None:
        cx, n = build_bipyramid(args.bipyramid), args.bipyramid
    else:
        try:
            cx, n = SimplicialComplex.from_text(args.complex.read_text()), None
        except (OSError, ValueError) as exc:
            parser.error(f"--complex: {exc}")
    nonfaces, primes = minimal_nonfaces(cx), facet_complement_primes(cx)
    if args.format == "records":
        rec = {"vertices": cx.num_vertices, "facets": [list(f) for f in cx.facets],
               "minimal_nonfaces": [list(s) for s in nonfaces],
               "facet_complement_primes": [list(s) for s in primes]}
        if n is not None:
            rec["labels"] = labels_line(n)[2:]
        _emit(out, [rec])
        return EXIT_OK
    if args.format == "csv":
        out.write("kind,vertices\n")
        for kind, sets in (("facet", cx.facets), ("nonface", nonfaces), ("prime", primes)):
            for s in sets:
                out.write(f"{kind},{' '.join(map(str, s))}\n")
        return EXIT_OK
    if n is not None:
        out.write(labels_line(n) + "\n")
    out.write(cx.to_text())
    out.write("# minimal non-faces\n")
    out.writelines(" ".join(map(str, s)) + "\n" for s in nonfaces)
    out.write("# facet-complement primes\n")
    out.writelines(" ".join(map(str, s)) + "\n" for s in primes)
    return EXIT_OK


def _cmd_ideal(args, out, ideal, n) -> int:
    primes = ideal.minimal_primes
    if args.format == "records":
        rec = {"variables": ideal.num_variables,
               "generators": [list(s) for s in ideal.generator_supports],
               "minimal_primes": [list(p) for p in primes]}
        if n is not None:
            rec["labels"] = labels_line(n)[2:]
        _emit(out, [rec])
        return EXIT_OK
    if args.format == "csv":
        out.write("kind,variables\n")
        for kind, sets in (("generator", ideal.generator_supports), ("prime", primes)):
            for s in sets:
                out.write(f"{kind},{' '.join(map(str, s))}\n")
        return EXIT_OK
    if n is not None:
        out.write(labels_line(n) + "\n")
    out.write(ideal.to_text())
    out.write(f"# {len(primes)} minimal primes\n")
    out.writelines(format_set(p, n) + "\n" for p in primes)
    return EXIT_OK


def _cmd_membership(parser, args, out, ideal, n) -> int:
    try:
        f = Monomial.parse(args.monomial, ideal.num_variables)
    except ValueError as exc:
        parser.error(f"--monomial: {exc}")
    member = symbolic_membership(f, ideal, args.m)
    prime, w = lightest_prime(f, ideal)
    if args.format == "records":
        _emit(out, [{"member": member, "m": args.m, "monomial": str(f),
                     "lightest_prime": list(prime), "weight": w}])
    elif args.format == "csv":
        out.write("monomial,m,member,lightest_prime,weight\n")
        out.write(f"{f},{args.m},{str(member).lower()},{' '.join(map(str, prime))},{w}\n")
    else:
        if n is not None:
            out.write(labels_line(n) + "\n")
        out.write(f"{str(member).lower()}\n")
        if member:
            out.write(f"smallest weight {w} >= {args.m}, at prime {format_set(prime, n)}\n")
        else:
            out.write(f"violated prime {format_set(prime, n)}: weight {w} < {args.m}\n")
    return EXIT_OK


def _cmd_alpha(args, out, ideal, n, trace, deadline) -> int:
    q = AlphaQuery(ideal, args.m)
    if args.bruteforce:
        cap = args.m * min(len(s) for s in ideal.generator_supports)
        try:
            res = alpha_bruteforce(q, cap, deadline=deadline)
        except DegreeCapExhausted as exc:
            out.write(f"error: {exc}\n")
            return EXIT_MISMATCH
    else:
        res = alpha_symbolic(q, deadline=deadline, trace=trace)
    if args.format == "records":
        _emit(out, [{"m": args.m, "alpha": res.value, "witness": str(res.witness)}])
    elif args.format == "csv":
        out.write(f"m,alpha,witness\n{args.m},{res.value},{res.witness}\n")
    else:
        if n is not None:
            out.write(labels_line(n) + "\n")
        out.write(f"{res.value}\nwitness: {res.witness}\n")
    return EXIT_OK


def _cmd_gamma(args, out, ideal, n, trace) -> int:
    report = gamma_report(ideal, m_max=args.m_max, s_max=args.s_max, jobs=args.jobs,
                          budget=args.budget, trace=trace)
    if args.format == "records":
        rec = report.to_record()
        if n is not None:
            rec["labels"] = labels_line(n)[2:]
        _emit(out, [rec])
    elif args.format == "csv":
        out.write(report.sequence_csv())
    else:
        if n is not None:
            out.write(labels_line(n) + "\n")
        out.write(report.summary() + "\n")
        for note in report.notes:
            out.write(f"note: {note}\n")
        if report.sequence:
            out.write("m,alpha,ratio,witness\n")
            out.writelines(f"{e.m},{e.alpha},{fmt(e.ratio)},{e.witness}\n" for e in report.sequence)
    if report.truncated:
        return EXIT_BUDGET
    return EXIT_OK if report.consistent else EXIT_MISMATCH


def _cmd_table(args, out) -> int:
    cells = alpha_table(range(args.n_min, args.n_max + 1), range(1, args.m_max + 1),
                        jobs=args.jobs, budget=args.budget)
    if args.format == "csv":
        out.write(table_csv(cells))
    elif args.format == "records":
        _emit(out, [{"n": c.n, "m": c.m,
                     "alpha": None if c.result is None else c.result.value,
                     "witness": None if c.result is None else str(c.result.witness),
                     "closed_form_prediction": c.prediction, "match": c.match} for c in cells])
    else:
        out.write("# labels: 0 = upper apex, 1..n = base cycle, n+1 = lower apex\n")
        rows = [("n", "m", "alpha", "witness", "predicted", "match")]
        for c in cells:
            rows.append((str(c.n), str(c.m),
                         "-" if c.result is None else str(c.result.value),
                         "-" if c.result is None else str(c.result.witness),
                         "-" if c.prediction is None else str(c.prediction),
                         "-" if c.match is None else str(c.match).lower()))
        widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
        for r in rows:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")
    if any(c.result is None for c in cells):
        return EXIT_BUDGET
    return EXIT_MISMATCH if any(c.match is False for c in cells) else EXIT_OK


def _cmd_verify(args, out) -> int:
    checks = verify_bipyramid(args.n_max, args.s_max, jobs=args.jobs, budget=args.budget)
    if args.format == "records":
        _emit(out, [{"check": c.name, "passed": c.passed, "detail": c.detail, "failing": c.failing}
                    for c in checks])
    elif args.format == "csv":
        out.write("check,passed,detail,failing\n")
        for c in checks:
            out.write(f"{c.name},{str(c.passed).lower()},\"{c.detail}\",{c.failing or ''}\n")
    else:
        out.write("# labels: 0 = upper apex, 1..n = base cycle, n+1 = lower apex\n")
        out.writelines(c.line() + "\n" for c in checks)
        failed = sum(not c.passed for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    if any(c.name == "budget" for c in checks):
        return EXIT_BUDGET
    return EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
