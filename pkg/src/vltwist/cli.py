"""Command-line entry point: ``verify``, ``eval`` and ``list-suites``."""

from __future__ import annotations

import argparse
import sys

from . import kernel
from .algebra import render
from .hopf import antipode0, coproduct0
from .parser import ParseError, parse_element
from .report import record_timings, render_report
from .scalars import GroupVec, parse_rational, parse_vec
from .series import render_series
from .suites import SUITES, Extras, run_suite
from .twist import InadmissibleContext, make_context, twisted_coproduct

# options whose values may start with "-" (negative rationals)
_VALUE_OPTIONS = {"--alpha", "--T", "--beta", "--gamma", "--a", "--d", "--expr"}


def _join_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _rat_list(s: str):
    return [parse_rational(x) for x in s.split(",") if x.strip()]


def _vec(s: str) -> GroupVec:
    return parse_vec(s)


def _vec_list(s: str) -> list[GroupVec]:
    vs = [parse_vec(x) for x in s.split(";") if x.strip()]
    for v in vs:
        if v.is_zero():
            raise argparse.ArgumentTypeError("lattice vectors must be nonzero")
    return vs


def _arg_type(fn, what):
    def conv(s):
        try:
            return fn(s)
        except (ValueError, ZeroDivisionError) as e:
            raise argparse.ArgumentTypeError(f"bad {what} {s!r}: {e}")

    conv.__name__ = what
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vltwist", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--order", type=int, default=None, help="truncation order N (series mod t^(N+1))")
    v.add_argument("--T", dest="T", type=_arg_type(_vec, "T"), default=GroupVec(1, 0),
                   help="a1,a2 with T = a1*d1 + a2*d2")
    v.add_argument("--alpha", type=_arg_type(_vec, "alpha"), default=GroupVec(1, 0))
    v.add_argument("--beta", type=_arg_type(_vec_list, "beta list"), default=None,
                   help="x1,x2[;x1,x2...]")
    v.add_argument("--gamma", type=_arg_type(_vec_list, "gamma list"), default=None)
    v.add_argument("--a", type=_arg_type(_rat_list, "rational list"), default=None)
    v.add_argument("--d", type=_arg_type(_rat_list, "rational list"), default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=None, help="number of random cases")
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="record elapsed_ms (breaks byte-identity)")

    e = sub.add_parser("eval", help="evaluate an expression to PBW normal form")
    e.add_argument("--expr", required=True)
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--coproduct", action="store_true", help="undeformed coproduct")
    mode.add_argument("--antipode", action="store_true", help="undeformed antipode")
    mode.add_argument("--twist-coproduct", action="store_true", help="twisted coproduct")
    e.add_argument("--order", type=int, default=4)
    e.add_argument("--T", dest="T", type=_arg_type(_vec, "T"), default=GroupVec(1, 0))
    e.add_argument("--alpha", type=_arg_type(_vec, "alpha"), default=GroupVec(1, 0))

    sub.add_parser("list-suites", help="list suite ids")
    sub.add_parser("info", help="show the active product kernel")
    return p


def _cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    order = suite.default_order if args.order is None else args.order
    try:
        ctx = make_context(args.T, args.alpha, order)
    except InadmissibleContext as exc:
        print(f"error: inadmissible context: {exc}", file=sys.stderr)
        return 2
    extras = Extras(
        a=args.a, d=args.d, beta=args.beta, gamma=args.gamma, seed=args.seed,
        cases=args.cases, max_degree=args.max_degree,
    )
    with record_timings(args.timings):
        report = run_suite(args.suite, ctx, extras)
    text = render_report(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def _cmd_eval(args) -> int:
    try:
        x = parse_element(args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.expr}\n  {' ' * (exc.column - 1)}^", file=sys.stderr)
        return 2
    if args.coproduct:
        out = render_series(coproduct0(x, 0)) or "0"
    elif args.antipode:
        out = render(antipode0(x))
    elif args.twist_coproduct:
        try:
            ctx = make_context(args.T, args.alpha, args.order)
        except InadmissibleContext as exc:
            print(f"error: inadmissible context: {exc}", file=sys.stderr)
            return 2
        out = render_series(twisted_coproduct(ctx, x)) or "0"
    else:
        out = render(x)
    print(out)
    return 0


def _cmd_list() -> int:
    for name in sorted(SUITES):
        s = SUITES[name]
        print(f"{name:<20} N={s.default_order}  {s.description}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_values(argv))
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "info":
        print(f"kernel: {kernel.IMPLEMENTATION}")
        return 0
    return _cmd_list()


if __name__ == "__main__":
    sys.exit(main())
