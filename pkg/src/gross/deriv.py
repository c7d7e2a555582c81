"""Relative differences, one-sided derivatives and derivatives intervals.

For a formula F the right relative difference is the rational function
F⁺(x, r) with ``F(x+r) - F(x) = r·F⁺(x, r)`` identically; the left one
satisfies ``F(x) - F(x-l) = l·F⁻(x, l)``.  Both are found by exact
polynomial division by the step symbol, so no limits are involved.
Setting the step to zero gives the side derivative.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import ONE, ZERO, GrossNumber, as_gross, compare, exact_div, mono_pow
from .errors import (
    DivisionByZero,
    FormulaeDiscontinuous,
    FormulaError,
    GrossError,
    NotFactorable,
    NotPolynomial,
    NotRational,
    TruncatedDivision,
    UndefinedAtZero,
    ZeroDenominator,
)
from .expr import Expr, PiecewiseFunc, evaluate
from .polys import Poly, divexact
from .ratform import RationalForm, to_rational_form
from .topo import Grid, neighbors
from .errors import OffGrid

__all__ = [
    "Side",
    "RelDiff",
    "FormulaStatus",
    "DerivKind",
    "DerivReport",
    "relative_difference",
    "side_derivative",
    "side_derivative_form",
    "tilde",
    "formulae_continuity_at",
    "derivative_report",
    "numerical_deriv_interval",
    "derivative_via_infinitesimal",
]

_SAMPLES = 6


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def step(self) -> str:
        return "l" if self is Side.LEFT else "r"


@dataclass(frozen=True)
class RelDiff:
    side: Side
    form: RationalForm  # symbols ("x", "l") or ("x", "r")

    @property
    def step(self) -> str:
        return self.side.step

    def __str__(self) -> str:
        return str(self.form)


def _formula(f: PiecewiseFunc | Expr, side: Side) -> Expr:
    if isinstance(f, Expr):
        return f
    return f.f1 if side is Side.LEFT else f.f3


def relative_difference(f: PiecewiseFunc | Expr, side: Side | str) -> RelDiff:
    side = Side(side)
    h = side.step
    symbols = ("x", h)
    try:
        F = to_rational_form(_formula(f, side), ("x",)).extend(symbols)
    except NotRational as exc:
        raise NotFactorable(str(exc)) from exc
    x_poly = Poly.var(0, 2)
    h_poly = Poly.var(1, 2)
    if side is Side.RIGHT:
        lo, hi = F, F.compose("x", x_poly + h_poly)
    else:
        lo, hi = F.compose("x", x_poly - h_poly), F
    # hi - lo over a common denominator, then isolate one factor of h
    num = hi.num * lo.den - lo.num * hi.den
    quot = divexact(num, h_poly)
    if quot is None:
        raise NotFactorable(f"the {side.value} difference of {F} has no factor {h}")
    form = RationalForm.make(quot, hi.den * lo.den, symbols)
    _verify(F, form, side)
    return RelDiff(side, form)


def _verify(F: RationalForm, form: RationalForm, side: Side) -> None:
    """Spot-check the factorization identity at rational sample points."""
    rng = random.Random(0x5EED)
    checked = 0
    for _ in range(_SAMPLES * 3):
        # integer points keep the evaluation in cheap int arithmetic
        x = Fraction(rng.randint(-60, 60))
        h = Fraction(rng.randint(1, 60))
        try:
            if side is Side.RIGHT:
                delta = F.evaluate([x + h, 0]) - F.evaluate([x, 0])
            else:
                delta = F.evaluate([x, 0]) - F.evaluate([x - h, 0])
            rhs = as_gross(h) * form.evaluate([x, h])
        except (DivisionByZero, TruncatedDivision, ZeroDenominator):
            continue
        if delta != rhs:
            raise NotFactorable(f"factorization check failed at x={x}, {side.step}={h}")
        checked += 1
        if checked == _SAMPLES:
            return


def side_derivative_form(rd: RelDiff) -> RationalForm:
    """The relative difference with the step set to zero, as a form in x."""
    try:
        return rd.form.subs(rd.step, ZERO)
    except ZeroDenominator as exc:
        raise UndefinedAtZero(f"{rd.form} has a pole at {rd.step} = 0") from exc


def side_derivative(rd: RelDiff) -> Expr:
    return side_derivative_form(rd).to_expr()


def tilde(rd: RelDiff, d: Expr | RationalForm) -> Expr:
    """Slope discrepancy ``F±(x, h) - d(x)``."""
    if isinstance(d, Expr):
        d = to_rational_form(d, ("x",))
    return (rd.form - d.extend(rd.form.symbols)).to_expr()


# -- formula continuity ------------------------------------------------------


class FormulaStatus(enum.Enum):
    CONTINUOUS = "continuous"
    LEFT_ONLY = "left-only"
    RIGHT_ONLY = "right-only"
    DISCONTINUOUS = "discontinuous"


def _value(e: Expr, x: GrossNumber) -> GrossNumber:
    """Evaluate directly, falling back to the cancelled rational form."""
    try:
        return evaluate(e, x)
    except (DivisionByZero, TruncatedDivision) as first:
        try:
            return to_rational_form(e, ("x",)).evaluate([x])
        except (NotRational, ZeroDenominator, DivisionByZero, TruncatedDivision):
            raise first from None


def _try_value(e: Expr, x: GrossNumber) -> GrossNumber | None:
    try:
        return _value(e, x)
    except (DivisionByZero, TruncatedDivision):
        return None


@dataclass(frozen=True)
class FormulaCheck:
    status: FormulaStatus
    f1: GrossNumber | None
    f2: GrossNumber
    f3: GrossNumber | None


def formulae_continuity_at(f: PiecewiseFunc, x) -> FormulaCheck:
    """Compare the three formulae at ``x``.

    A side whose formula is undefined at ``x`` counts as discontinuous.
    The middle formula must be defined.
    """
    x = as_gross(x)
    try:
        v2 = _value(f.f2, x)
    except GrossError as exc:
        raise FormulaError("f2", exc) from exc
    v1 = _try_value(f.f1, x)
    v3 = _try_value(f.f3, x)
    left = v1 is not None and v1 == v2
    right = v3 is not None and v3 == v2
    if left and right:
        status = FormulaStatus.CONTINUOUS
    elif left:
        status = FormulaStatus.LEFT_ONLY
    elif right:
        status = FormulaStatus.RIGHT_ONLY
    else:
        status = FormulaStatus.DISCONTINUOUS
    return FormulaCheck(status, v1, v2, v3)


# -- derivative reports --------------------------------------------------------


class DerivKind(enum.Enum):
    UNIQUE = "unique"
    INTERVAL = "interval"


@dataclass(frozen=True)
class DerivReport:
    kind: DerivKind
    value: GrossNumber | None
    lo: GrossNumber | None
    hi: GrossNumber | None
    left: GrossNumber
    right: GrossNumber
    left_form: RationalForm
    right_form: RationalForm
    formulae: FormulaStatus
    same_form: bool

    @property
    def derivative(self) -> Expr | None:
        """The derivative as a formula in x when both sides share one."""
        return self.left_form.to_expr() if self.same_form else None

    def __str__(self) -> str:
        if self.kind is DerivKind.UNIQUE:
            return f"derivative: {self.value}"
        return f"interval: [{self.lo}, {self.hi}]"


def _form_value(form: RationalForm, x: GrossNumber, side: Side) -> GrossNumber:
    try:
        return form.evaluate([x])
    except (DivisionByZero, TruncatedDivision) as exc:
        raise UndefinedAtZero(f"{side.value} derivative {form} is undefined at x = {x}") from exc


def derivative_report(f: PiecewiseFunc | Expr, x, relaxed: bool = False) -> DerivReport:
    """Derivative or derivatives interval of ``f`` at ``x``.

    Strict mode needs continuous formulae at ``x``.  Relaxed mode only
    needs the outer formulae to agree there.
    """
    x = as_gross(x)
    if isinstance(f, Expr):
        f = PiecewiseFunc.single(f)
    fa = f.around(x)
    check = formulae_continuity_at(fa, x)
    if relaxed:
        if check.f1 is None or check.f3 is None or check.f1 != check.f3:
            raise FormulaeDiscontinuous(f"left and right formulae disagree at x = {x}")
    elif check.status is not FormulaStatus.CONTINUOUS:
        raise FormulaeDiscontinuous(f"formulae are {check.status.value} at x = {x}")
    lform = side_derivative_form(relative_difference(fa, Side.LEFT))
    rform = side_derivative_form(relative_difference(fa, Side.RIGHT))
    lv = _form_value(lform, x, Side.LEFT)
    rv = _form_value(rform, x, Side.RIGHT)
    same = lform.equivalent(rform)
    common = dict(left=lv, right=rv, left_form=lform, right_form=rform, formulae=check.status, same_form=same)
    if same or lv == rv:
        return DerivReport(DerivKind.UNIQUE, lv, None, None, **common)
    lo, hi = (lv, rv) if compare(lv, rv) < 0 else (rv, lv)
    return DerivReport(DerivKind.INTERVAL, None, lo, hi, **common)


def numerical_deriv_interval(f: PiecewiseFunc | Expr, g: Grid, x) -> tuple[GrossNumber, GrossNumber]:
    """Min and max of the two neighbor difference quotients."""
    if isinstance(f, Expr):
        f = PiecewiseFunc.single(f)
    x = as_gross(x)
    lo, hi = neighbors(g, x)
    if lo is None or hi is None:
        raise OffGrid(f"{x} is an end of the grid; both neighbors are needed")
    fx = f(x)
    ql = exact_div(fx - f(lo), x - lo)
    qr = exact_div(f(hi) - fx, hi - x)
    return (ql, qr) if compare(ql, qr) <= 0 else (qr, ql)


# -- infinitesimal step --------------------------------------------------------


def _powers(v: GrossNumber) -> list[Fraction]:
    out = []
    for _, p in v.terms:
        if type(p) is not Fraction:
            raise NotPolynomial(f"{v} has non-rational grosspowers; the step size cannot be bounded")
        out.append(p)
    return out


def derivative_via_infinitesimal(f: Expr, x) -> GrossNumber:
    """Derivative of a polynomial from one difference quotient.

    The step is h = ①^-s with s large enough that every term carrying a
    factor of h falls below the smallest grosspower the derivative can
    have; those terms are then dropped.
    """
    x = as_gross(x)
    try:
        form = to_rational_form(f, ("x",))
    except NotRational as exc:
        raise NotPolynomial(str(exc)) from exc
    if not form.is_polynomial():
        raise NotPolynomial(f"{f} is not a polynomial")
    poly = form.num.scale(exact_div(ONE, form.den.const_value()))
    degree = poly.degree(0)
    if degree <= 0:
        return ZERO
    cpowers = [p for c in poly.terms.values() for p in _powers(c)]
    xpowers = _powers(x) or [Fraction(0)]
    lower = min(cpowers) + degree * min(min(xpowers), 0)
    upper = max(cpowers) + degree * max(max(xpowers), 0)
    s = max(1, math.floor(upper - lower) + 1)
    h = mono_pow(Fraction(-s))
    quotient = (poly.evaluate([x + h]) - poly.evaluate([x])) * mono_pow(Fraction(s))
    kept = [(d, p) for d, p in quotient.terms if p >= lower]
    return GrossNumber(kept)
