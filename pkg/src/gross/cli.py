"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on a syntax error.  Errors
print ``error: <Name>: <message>`` on stderr.  Values that start with ``-``
must be attached to their flag (``--at=-G``).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import config
from .core import GrossNumber, classify
from .deriv import Side, derivative_report, relative_difference, side_derivative, tilde
from .errors import FormulaeDiscontinuous, GrossError, GrossSyntaxError, UndefinedAtZero
from .expr import PiecewiseFunc, evaluate, load_function, parse_expr, parse_function
from .numeral import format_number
from .series import (
    ExpSum,
    PointSet,
    arithmetic_sum,
    count_points,
    geometric_sum,
    repeated_sum,
    repeating_digits,
)
from .topo import Grid, Unit, convert_unit, func_continuity_at, func_continuity_over, sequence_reach, set_continuity

__all__ = ["main", "run", "build_parser"]


def _num(text: str) -> GrossNumber:
    """Numbers on the command line may be written as constant expressions."""
    return evaluate(parse_expr(text))


def _grid(text: str) -> Grid:
    parts = text.split(",")
    if len(parts) != 3:
        raise GrossSyntaxError("grid must be 'a,b,step'", text, 0)
    a, b, step = (_num(p) for p in parts)
    return Grid(a, b, step)


def _function(args) -> PiecewiseFunc:
    if args.func is not None:
        return load_function(args.func)
    if args.expr is not None:
        return parse_function(args.expr)
    raise GrossSyntaxError("give a function with --func FILE or --expr TEXT")


def _unit(text: str | None) -> Unit:
    return Unit(_num(text)) if text is not None else Unit()


def _side_mark(side: Side) -> str:
    return "-" if side is Side.LEFT else "+"


# -- subcommands ----------------------------------------------------------------


def cmd_eval(args, out: TextIO) -> None:
    if args.func is not None:
        f = load_function(args.func)
    elif args.expression is not None:
        f = parse_function(args.expression)
    else:
        raise GrossSyntaxError("give an expression or --func FILE")
    if args.at is None:
        if not f.is_single:
            raise GrossSyntaxError("a piecewise function needs --at")
        value = evaluate(f.f2, max_terms=args.max_terms)
    else:
        x = _num(args.at)
        value = evaluate(f.formula_at(x), x, max_terms=args.max_terms)
    out.write(format_number(value) + "\n")
    if args.verbose:
        out.write(f"class: {classify(value).value}\n")


def cmd_derive(args, out: TextIO) -> None:
    f = _function(args)
    x = _num(args.at)
    try:
        rep = derivative_report(f, x, relaxed=args.relaxed)
    except (FormulaeDiscontinuous, UndefinedAtZero) as exc:
        out.write(f"undefined: {exc}\n")
        return
    out.write(str(rep) + "\n")
    if args.verbose:
        out.write(f"formulae: {rep.formulae.value}\n")
        out.write(f"left: {rep.left}\n")
        out.write(f"right: {rep.right}\n")
        if rep.derivative is not None:
            out.write(f"formula: {rep.derivative}\n")


def cmd_reldiff(args, out: TextIO) -> None:
    f = _function(args)
    sides = [Side(args.side)] if args.side else [Side.LEFT, Side.RIGHT]
    for side in sides:
        rd = relative_difference(f, side)
        m = _side_mark(side)
        out.write(f"f{m}(x,{rd.step}) = {rd}\n")
        try:
            d = side_derivative(rd)
        except UndefinedAtZero as exc:
            out.write(f"f{m}(x) undefined: {exc}\n")
            continue
        out.write(f"f{m}(x) = {d}\n")
        if args.verbose:
            out.write(f"tilde f{m}(x,{rd.step}) = {tilde(rd, d)}\n")


def _write_point(rep, out: TextIO) -> None:
    for label, value in (("f(x)-f(x-)", rep.left), ("f(x)-f(x+)", rep.right)):
        if value is not None:
            kind = "zero" if value.is_zero() else classify(value).value
            out.write(f"{label} = {value} ({kind})\n")


def cmd_continuity(args, out: TextIO) -> None:
    g = _grid(args.grid)
    u = _unit(args.unit)
    if args.target == "set":
        out.write(str(set_continuity(g, u)) + "\n")
        return
    f = _function(args)
    u2 = _unit(args.unit2) if args.unit2 is not None else None
    if args.at is not None:
        rep = func_continuity_at(f, g, _num(args.at), u, u2)
        _write_point(rep, out)
        out.write(("continuous" if rep.continuous else "not continuous") + f" at x = {rep.x}\n")
        return
    over = func_continuity_over(f, g, u, monotone=args.monotone, u2=u2)
    if over.continuous:
        out.write("continuous over the grid\n")
        if args.verbose:
            for rep in over.checked:
                out.write(f"x = {rep.x}\n")
                _write_point(rep, out)
        return
    w = over.witness
    out.write(f"not continuous; witness x = {w.x}\n")
    _write_point(w, out)


def _write_expsum(value: ExpSum | GrossNumber, out: TextIO) -> None:
    out.write(str(value) + "\n")


def cmd_series(args, out: TextIO) -> None:
    kind = args.kind
    if kind == "arithmetic":
        _write_expsum(arithmetic_sum(_num(args.a1), _num(args.d), _num(args.n)), out)
    elif kind == "repeat":
        _write_expsum(repeated_sum(_num(args.item), _num(args.count)), out)
    elif kind == "geometric":
        q = _num(args.q)
        q_arg = q.to_fraction() if q.is_rational() else q
        _write_expsum(geometric_sum(q_arg, _num(args.n), args.start), out)
    elif kind == "telescope":
        q = _num(args.q)
        q_arg = q.to_fraction() if q.is_rational() else q
        n = _num(args.n)
        _write_expsum(geometric_sum(q_arg, n + 1, args.start) - geometric_sum(q_arg, n, args.start), out)
    elif kind == "digits":
        value = repeating_digits(_num(args.integer), args.digit, _num(args.places), args.radix)
        if args.subtract_from is not None:
            value = ExpSum.of(_num(args.subtract_from)) - value
        _write_expsum(value, out)


def cmd_count(args, out: TextIO) -> None:
    _write_expsum(count_points(PointSet(args.kind.replace("-", "_")), args.radix), out)


def cmd_reach(args, out: TextIO) -> None:
    out.write(format_number(sequence_reach(_num(args.start))) + "\n")


def cmd_convert(args, out: TextIO) -> None:
    value = convert_unit(_num(args.value), _unit(args.unit), _unit(args.unit2))
    out.write(format_number(value) + "\n")
    if args.verbose:
        cls = classify(value)
        out.write(f"class: {cls.value}\n")


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-terms", type=int, default=None, help="term budget for non-terminating divisions")
    common.add_argument("--depth", type=int, default=None, help="maximum nesting of grosspowers")
    common.add_argument("--verbose", action="store_true", help="print diagnostics")

    func = argparse.ArgumentParser(add_help=False)
    func.add_argument("--func", metavar="FILE", help="function file (piece format or a bare expression)")
    func.add_argument("--expr", metavar="TEXT", help="function text inline")

    p = argparse.ArgumentParser(prog="gross", description="Exact arithmetic and calculus with grossone.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate an expression or function")
    s.add_argument("expression", nargs="?")
    s.add_argument("--func", metavar="FILE")
    s.add_argument("--at", metavar="X")
    s.set_defaults(handler=cmd_eval)

    s = sub.add_parser("derive", parents=[common, func], help="derivative or derivatives interval at a point")
    s.add_argument("--at", metavar="X", required=True)
    s.add_argument("--relaxed", action="store_true", help="only require the outer formulae to agree")
    s.set_defaults(handler=cmd_derive)

    s = sub.add_parser("reldiff", parents=[common, func], help="relative differences and side derivatives")
    s.add_argument("--side", choices=[e.value for e in Side])
    s.set_defaults(handler=cmd_reldiff)

    s = sub.add_parser("continuity", parents=[common], help="continuity of grids and functions")
    s.add_argument("target", choices=["set", "func"])
    s.add_argument("--grid", metavar="A,B,STEP", required=True)
    s.add_argument("--unit", metavar="U", help="unit of measure (argument axis)")
    s.add_argument("--unit2", metavar="U", help="unit of measure for function values")
    s.add_argument("--at", metavar="X")
    s.add_argument("--monotone", action="store_true", help="the function is monotone on the grid")
    s.add_argument("--func", metavar="FILE")
    s.add_argument("--expr", metavar="TEXT")
    s.set_defaults(handler=cmd_continuity)

    s = sub.add_parser("series", parents=[common], help="closed-form sums")
    s.add_argument("kind", choices=["arithmetic", "geometric", "repeat", "telescope", "digits"])
    s.add_argument("--a1", default="1", help="first item (arithmetic)")
    s.add_argument("--d", default="1", help="difference (arithmetic)")
    s.add_argument("--n", default="G", help="item count, or last index for geometric sums")
    s.add_argument("--q", default="2", help="ratio (geometric)")
    s.add_argument("--from", dest="start", type=int, default=0, help="first index (geometric)")
    s.add_argument("--item", default="1", help="repeated item")
    s.add_argument("--count", default="G", help="number of repeated items")
    s.add_argument("--integer", default="0", help="integer part (digits)")
    s.add_argument("--digit", type=int, default=9, help="repeated digit (digits)")
    s.add_argument("--places", default="G", help="number of repeated digits")
    s.add_argument("--radix", type=int, default=10)
    s.add_argument("--subtract-from", metavar="V", help="print V minus the numeral (digits)")
    s.set_defaults(handler=cmd_series)

    s = sub.add_parser("count", parents=[common], help="number of expressible points")
    s.add_argument("kind", choices=[k.value for k in PointSet])
    s.add_argument("--radix", type=int, default=None)
    s.set_defaults(handler=cmd_count)

    s = sub.add_parser("reach", parents=[common], help="last element of a complete sequence")
    s.add_argument("start")
    s.set_defaults(handler=cmd_reach)

    s = sub.add_parser("convert", parents=[common], help="change the unit of measure of a value")
    s.add_argument("value")
    s.add_argument("--unit", metavar="FROM", help="unit the value is measured in (default 1)")
    s.add_argument("--unit2", metavar="TO", help="target unit (default 1)")
    s.set_defaults(handler=cmd_convert)
    return p


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with config.limits(depth=args.depth, terms=args.max_terms):
            args.handler(args, out)
    except GrossSyntaxError as exc:
        err.write(f"error: {exc.name}: {exc}\n")
        return 2
    except GrossError as exc:
        err.write(f"error: {exc.name}: {exc}\n")
        return 1
    except (OSError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    code = run(sys.argv[1:] if argv is None else argv)
    if argv is None:
        sys.exit(code)
    return code
