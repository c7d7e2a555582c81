"""Arithmetic expressions in one variable, and piecewise functions built from them.

Expression syntax::

    expr    := term (("+"|"-") term)*
    term    := unary (("*"|"/") unary)*
    unary   := ("-"|"+") unary | power
    power   := atom ("^" (signed-integer | gross-power))?
    atom    := numeral | name | "(" expr ")" | ("min"|"max") "(" expr "," expr ")"

A numeral is one term of the number grammar (``3``, ``0.5``, ``G``,
``4G^-2``, ``1/2G``, ``G^{G^-1}``).  ``1/2G`` is the single numeral
(1/2)·①; write ``1/(2G)`` for the quotient.  A gross power (``G...`` or
``{number}``) is accepted only on the constants 1 and 0.

Piecewise syntax (one function per file, ``#`` starts a comment line)::

    piece x<P: <expr>; at P: <expr>; x>P: <expr>

A bare expression is shorthand for the same formula on all three pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from . import config
from .core import ONE, GrossNumber, as_gross, compare, div, normalize, pow_nat
from .errors import DivisionByZero, GrossSyntaxError, TruncatedDivision
from .numeral import Scanner, format_number, read_number, read_power

__all__ = [
    "Expr",
    "Const",
    "Var",
    "Add",
    "Sub",
    "Neg",
    "Mul",
    "Div",
    "Pow",
    "Min",
    "Max",
    "X",
    "const",
    "parse_expr",
    "format_expr",
    "evaluate",
    "PiecewiseFunc",
    "parse_function",
    "load_function",
]


class Expr:
    """Base class for immutable expression nodes; supports operator sugar."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, _wrap(other))

    def __radd__(self, other):
        return Add(_wrap(other), self)

    def __sub__(self, other):
        return Sub(self, _wrap(other))

    def __rsub__(self, other):
        return Sub(_wrap(other), self)

    def __mul__(self, other):
        return Mul(self, _wrap(other))

    def __rmul__(self, other):
        return Mul(_wrap(other), self)

    def __truediv__(self, other):
        return Div(self, _wrap(other))

    def __rtruediv__(self, other):
        return Div(_wrap(other), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, k: int):
        return Pow(self, k)

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True, eq=True, repr=True)
class Const(Expr):
    value: GrossNumber


@dataclass(frozen=True)
class Var(Expr):
    name: str = "x"


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exp: int

    def __post_init__(self):
        if not isinstance(self.exp, int):
            raise TypeError("Pow exponents are integers")


@dataclass(frozen=True)
class Min(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Max(Expr):
    left: Expr
    right: Expr


X = Var("x")


def const(value) -> Const:
    return Const(as_gross(value))


def _wrap(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction, GrossNumber)):
        return Const(as_gross(value))
    raise TypeError(f"cannot use {type(value).__name__} in an expression")


# -- evaluation ---------------------------------------------------------------

Point = Union[GrossNumber, int, Fraction]


def evaluate(e: Expr, x: Point | None = None, env: Mapping[str, Point] | None = None, max_terms: int | None = None) -> GrossNumber:
    """Evaluate exactly at a gross point.

    ``x`` binds the variable ``x``; ``env`` binds any other names.  A
    division with no finite quotient raises :class:`TruncatedDivision`
    carrying the truncated quotient.
    """
    values = {k: as_gross(v) for k, v in (env or {}).items()}
    if x is not None:
        values["x"] = as_gross(x)
    limit = config.MAX_TERMS if max_terms is None else max_terms
    return _eval(e, values, limit)


def _quotient(a: GrossNumber, b: GrossNumber, limit: int) -> GrossNumber:
    if b.is_zero():
        raise DivisionByZero(f"division of {a} by zero")
    q, exact = div(a, b, limit)
    if not exact:
        raise TruncatedDivision(f"({a}) / ({b}) has no finite expansion; truncated to {q}", q)
    return q


def _eval(e: Expr, values: dict, limit: int) -> GrossNumber:
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        try:
            return values[e.name]
        except KeyError:
            raise ValueError(f"no value bound for variable {e.name!r}") from None
    if isinstance(e, Add):
        return _eval(e.left, values, limit) + _eval(e.right, values, limit)
    if isinstance(e, Sub):
        return _eval(e.left, values, limit) - _eval(e.right, values, limit)
    if isinstance(e, Neg):
        return -_eval(e.arg, values, limit)
    if isinstance(e, Mul):
        return _eval(e.left, values, limit) * _eval(e.right, values, limit)
    if isinstance(e, Div):
        return _quotient(_eval(e.left, values, limit), _eval(e.right, values, limit), limit)
    if isinstance(e, Pow):
        base = _eval(e.base, values, limit)
        if e.exp >= 0:
            return pow_nat(base, e.exp)
        return _quotient(ONE, pow_nat(base, -e.exp), limit)
    if isinstance(e, (Min, Max)):
        a = _eval(e.left, values, limit)
        b = _eval(e.right, values, limit)
        c = compare(a, b)
        if isinstance(e, Min):
            return a if c <= 0 else b
        return a if c >= 0 else b
    raise TypeError(f"unknown expression node {type(e).__name__}")


def variables(e: Expr) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Const):
        return set()
    if isinstance(e, Neg):
        return variables(e.arg)
    if isinstance(e, Pow):
        return variables(e.base)
    return variables(e.left) | variables(e.right)


# -- formatting ---------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4}


def _const_text(v: GrossNumber) -> tuple[str, int]:
    text = format_number(v)
    if len(v) > 1:
        return text, 1
    if v.sign() < 0:
        return text, 3
    if "/" in text:
        # a p/q digit reads as a quotient
        return text, 2
    return text, 5


def _fmt(e: Expr) -> tuple[str, int]:
    if isinstance(e, Const):
        return _const_text(e.value)
    if isinstance(e, Var):
        return e.name, 5
    if isinstance(e, (Min, Max)):
        name = "min" if isinstance(e, Min) else "max"
        return f"{name}({format_expr(e.left)}, {format_expr(e.right)})", 5
    if isinstance(e, Neg):
        s, p = _fmt(e.arg)
        return "-" + (s if p > 3 else f"({s})"), 3
    if isinstance(e, Pow):
        s, p = _fmt(e.base)
        # a numeral with a G already carries a '^'; parenthesize it
        if p < 5 or (isinstance(e.base, Const) and "G" in s):
            s = f"({s})"
        return f"{s}^{e.exp}", 4
    prec = _PREC[type(e)]
    ls, lp = _fmt(e.left)
    rs, rp = _fmt(e.right)
    if lp < prec:
        ls = f"({ls})"
    if rp < prec or (rp == prec and isinstance(e, (Sub, Div))) or (isinstance(e, (Add, Sub)) and rp == 3):
        rs = f"({rs})"
    op = {Add: " + ", Sub: " - ", Mul: "*", Div: "/"}[type(e)]
    if isinstance(e, Mul) and rp == 3:
        rs = f"({rs})" if not rs.startswith("(") else rs
    return ls + op + rs, prec


def format_expr(e: Expr) -> str:
    """Render an expression in the syntax accepted by :func:`parse_expr`."""
    return _fmt(e)[0]


# -- parsing ------------------------------------------------------------------


class _ExprParser:
    def __init__(self, text: str):
        self.sc = Scanner(text)

    def parse(self) -> Expr:
        e = self.expr()
        if not self.sc.at_end():
            raise self.sc.error("unexpected trailing text")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while True:
            c = self.sc.peek()
            if c == "+":
                self.sc.accept("+")
                e = Add(e, self.term())
            elif c == "-":
                self.sc.accept("-")
                e = Sub(e, self.term())
            else:
                return e

    def term(self) -> Expr:
        e = self.unary()
        while True:
            c = self.sc.peek()
            if c == "*":
                self.sc.accept("*")
                e = Mul(e, self.unary())
            elif c == "/":
                self.sc.accept("/")
                e = Div(e, self.unary())
            else:
                return e

    def unary(self) -> Expr:
        if self.sc.accept("-"):
            inner = self.unary()
            if isinstance(inner, Const):
                return Const(-inner.value)
            return Neg(inner)
        if self.sc.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.sc.accept("^"):
            sc = self.sc
            if sc.peek() in ("{", "G"):
                return self._gross_power(base)
            sign = -1 if sc.accept("-") else 1
            if sign == 1:
                sc.accept("+")
            sc.skip()
            digits = sc.read_digits()
            if not digits:
                raise sc.error("expected an integer exponent")
            if sc.pos < len(sc.text) and sc.text[sc.pos] == ".":
                raise sc.error("exponents of expressions must be integers")
            return Pow(base, sign * int(digits))
        return base

    def _gross_power(self, base: Expr) -> Expr:
        # only 0 and 1 have a positional value under a gross exponent
        sc = self.sc
        at = sc.pos
        e = as_gross(read_power(sc) if sc.peek() == "{" else self.numeral())
        if isinstance(base, Const) and base.value == 1:
            return Const(ONE)
        if isinstance(base, Const) and base.value.is_zero() and e.sign() > 0:
            return base
        sc.pos = at
        raise sc.error("a gross exponent needs a base of 1, or 0 with a positive exponent")

    def atom(self) -> Expr:
        sc = self.sc
        c = sc.peek()
        if c == "(":
            sc.accept("(")
            e = self.expr()
            sc.expect(")")
            return e
        if c.isdigit() or c == "G":
            return Const(self.numeral())
        for name, node in (("min", Min), ("max", Max)):
            if sc.peek_word(name):
                sc.accept(name)
                sc.expect("(")
                a = self.expr()
                sc.expect(",")
                b = self.expr()
                sc.expect(")")
                return node(a, b)
        if c.isalpha() or c == "_":
            start = sc.pos
            while sc.pos < len(sc.text) and (sc.text[sc.pos].isalnum() or sc.text[sc.pos] == "_"):
                sc.pos += 1
            return Var(sc.text[start : sc.pos])
        raise sc.error("expected a number, variable or '('")

    def numeral(self) -> GrossNumber:
        """One numeral term; ``p/q`` is glued to the coefficient only before ``G``."""
        sc = self.sc
        sc.skip()
        start = sc.pos
        got = sc.read_decimal()
        coeff = Fraction(1)
        if got is not None:
            coeff, had_point = got
            if not had_point and sc.peek() == "/":
                save = sc.pos
                sc.accept("/")
                sc.skip()
                den = sc.read_digits()
                if den and int(den) > 0 and sc.peek() == "G":
                    coeff = coeff / int(den)
                else:
                    sc.pos = save
        if sc.peek() == "G":
            sc.accept("G")
            if sc.pos < len(sc.text) and (sc.text[sc.pos].isalnum() or sc.text[sc.pos] == "_"):
                raise sc.error("G must not be followed by letters")
            power = Fraction(1)
            if sc.accept("^"):
                power = read_power(sc)
            return normalize([(coeff, power)])
        if got is None:
            sc.pos = start
            raise sc.error("expected a numeral")
        return as_gross(coeff)


def parse_expr(text: str) -> Expr:
    """Parse an arithmetic expression such as ``"7*x^8 + 2*x^3"``."""
    if not text.strip():
        raise GrossSyntaxError("empty expression", text, 0)
    return _ExprParser(text).parse()


# -- piecewise functions --------------------------------------------------------


@dataclass(frozen=True)
class PiecewiseFunc:
    """Three formulae around a breakpoint: left (f1), at the point (f2), right (f3).

    ``breakpoint`` is None for the single-formula shorthand, in which case
    the same expression applies everywhere.
    """

    f1: Expr
    f2: Expr
    f3: Expr
    breakpoint: GrossNumber | None = None

    @classmethod
    def single(cls, e: Expr) -> PiecewiseFunc:
        return cls(e, e, e, None)

    @property
    def is_single(self) -> bool:
        return self.breakpoint is None

    def formula_at(self, xi: GrossNumber) -> Expr:
        if self.breakpoint is None:
            return self.f2
        c = compare(as_gross(xi), self.breakpoint)
        return self.f1 if c < 0 else self.f3 if c > 0 else self.f2

    def __call__(self, xi: Point) -> GrossNumber:
        xi = as_gross(xi)
        return evaluate(self.formula_at(xi), xi)

    def around(self, x: GrossNumber) -> PiecewiseFunc:
        """The three formulae that govern a neighborhood of ``x``.

        Away from the breakpoint one formula covers both sides.
        """
        if self.breakpoint is None:
            return self
        c = compare(as_gross(x), self.breakpoint)
        if c == 0:
            return self
        f = self.f1 if c < 0 else self.f3
        return PiecewiseFunc(f, f, f, None)

    def __str__(self) -> str:
        if self.breakpoint is None:
            return format_expr(self.f2)
        p = format_number(self.breakpoint)
        return f"piece x<{p}: {format_expr(self.f1)}; at {p}: {format_expr(self.f2)}; x>{p}: {format_expr(self.f3)}"


def _strip_comments(text: str) -> str:
    return "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))


def parse_function(text: str) -> PiecewiseFunc:
    body = _strip_comments(text)
    sc = Scanner(body)
    if not sc.peek_word("piece"):
        return PiecewiseFunc.single(parse_expr(body))
    sc.accept("piece")
    parts: dict[str, tuple[GrossNumber, Expr]] = {}
    while True:
        if sc.peek_word("at"):
            sc.accept("at")
            kind = "at"
        else:
            start = sc.pos
            if not sc.accept("x"):
                raise sc.error("expected a guard 'x<P', 'at P' or 'x>P'")
            if sc.accept("<"):
                kind = "left"
            elif sc.accept(">"):
                kind = "right"
            else:
                sc.pos = start
                raise sc.error("expected '<' or '>' in guard")
        if kind in parts:
            raise sc.error(f"duplicate {kind!r} clause")
        point = read_number(sc)
        sc.expect(":")
        parser = _ExprParser(body)
        parser.sc = sc
        formula = parser.expr()
        parts[kind] = (point, formula)
        if not sc.accept(";"):
            break
        if sc.at_end():
            break
    if not sc.at_end():
        raise sc.error("unexpected trailing text")
    missing = {"left", "at", "right"} - parts.keys()
    if missing:
        raise GrossSyntaxError(f"piecewise definition lacks the {', '.join(sorted(missing))} clause", body, sc.pos)
    points = {parts[k][0] for k in parts}
    if len(points) != 1:
        raise GrossSyntaxError("guards name different breakpoints", body, sc.pos)
    return PiecewiseFunc(parts["left"][1], parts["at"][1], parts["right"][1], parts["at"][0])


def load_function(path) -> PiecewiseFunc:
    with open(path, encoding="utf-8") as fh:
        return parse_function(fh.read())
