"""Rational functions in one or two symbols with gross coefficients.

A :class:`RationalForm` is kept canonical: common polynomial factors are
cancelled (as far as the gcd can find them) and the leading coefficient of
the denominator is 1 whenever that coefficient is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ONE, ZERO, GrossNumber, as_gross, div
from .errors import DivisionByZero, NotRational, TruncatedDivision, ZeroDenominator
from .expr import Add, Const, Div, Expr, Max, Min, Mul, Neg, Pow, Sub, Var, format_expr
from .polys import Poly, divexact, poly_gcd

__all__ = ["RationalForm", "to_rational_form"]


def _normalized(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDenominator("denominator is identically zero")
    n = num.nvars
    if num.is_zero():
        return num, Poly.const(ONE, n)
    if not den.is_const():
        g = poly_gcd(num, den)
        if not g.is_const():
            qn, qd = divexact(num, g), divexact(den, g)
            if qn is not None and qd is not None:
                num, den = qn, qd
    lc = den.lead_coeff()
    if lc != 1:
        inv = _unit_inverse(lc)
        if inv is not None:
            num, den = num.scale(inv), den.scale(inv)
        elif den.is_const():
            q = divexact(num, den)
            if q is not None:
                num, den = q, Poly.const(ONE, n)
    return num, den


def _unit_inverse(c: GrossNumber) -> GrossNumber | None:
    if c.is_monomial():
        q, _ = div(ONE, c)
        return q
    return None


@dataclass(frozen=True)
class RationalForm:
    num: Poly
    den: Poly
    symbols: tuple[str, ...]

    @classmethod
    def make(cls, num: Poly, den: Poly, symbols: Sequence[str]) -> RationalForm:
        n, d = _normalized(num, den)
        return cls(n, d, tuple(symbols))

    @classmethod
    def const(cls, c, symbols: Sequence[str]) -> RationalForm:
        k = len(symbols)
        return cls(Poly.const(as_gross(c), k), Poly.const(ONE, k), tuple(symbols))

    @classmethod
    def var(cls, name: str, symbols: Sequence[str]) -> RationalForm:
        k = len(symbols)
        return cls(Poly.var(list(symbols).index(name), k), Poly.const(ONE, k), tuple(symbols))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: RationalForm) -> None:
        if self.symbols != other.symbols:
            raise ValueError(f"symbol mismatch: {self.symbols} vs {other.symbols}")

    def __add__(self, other: RationalForm) -> RationalForm:
        self._check(other)
        if self.den == other.den:
            return RationalForm.make(self.num + other.num, self.den, self.symbols)
        return RationalForm.make(self.num * other.den + other.num * self.den, self.den * other.den, self.symbols)

    def __neg__(self) -> RationalForm:
        return RationalForm(-self.num, self.den, self.symbols)

    def __sub__(self, other: RationalForm) -> RationalForm:
        return self + (-other)

    def __mul__(self, other: RationalForm) -> RationalForm:
        self._check(other)
        return RationalForm.make(self.num * other.num, self.den * other.den, self.symbols)

    def __truediv__(self, other: RationalForm) -> RationalForm:
        self._check(other)
        if other.num.is_zero():
            raise ZeroDenominator("division by an identically zero form")
        return RationalForm.make(self.num * other.den, self.den * other.num, self.symbols)

    def __pow__(self, k: int) -> RationalForm:
        if k >= 0:
            return RationalForm(self.num**k, self.den**k, self.symbols)
        if self.num.is_zero():
            raise ZeroDenominator("negative power of an identically zero form")
        return RationalForm.make(self.den ** (-k), self.num ** (-k), self.symbols)

    # -- queries ----------------------------------------------------------

    def is_polynomial(self) -> bool:
        return self.den.is_const()

    def equivalent(self, other: RationalForm) -> bool:
        """Same rational function (cross-multiplication test)."""
        self._check(other)
        return self.num * other.den == other.num * self.den

    def evaluate(self, values: Sequence | dict, max_terms: int | None = None) -> GrossNumber:
        if isinstance(values, dict):
            values = [values[s] for s in self.symbols]
        vals = [as_gross(v) for v in values]
        n = self.num.evaluate(vals)
        d = self.den.evaluate(vals)
        if d.is_zero():
            raise DivisionByZero(f"denominator of {self} vanishes")
        q, exact = div(n, d, max_terms)
        if not exact:
            raise TruncatedDivision(f"({n}) / ({d}) has no finite expansion; truncated to {q}", q)
        return q

    def subs(self, symbol: str, value) -> RationalForm:
        """Substitute a value for one symbol, dropping it from the symbol list."""
        i = self.symbols.index(symbol)
        value = as_gross(value)
        rest = self.symbols[:i] + self.symbols[i + 1 :]
        den = self.den.subs(i, value)
        if den.is_zero():
            raise ZeroDenominator(f"denominator vanishes at {symbol} = {value}")
        return RationalForm.make(self.num.subs(i, value), den, rest)

    def compose(self, symbol: str, replacement: Poly) -> RationalForm:
        i = self.symbols.index(symbol)
        return RationalForm.make(self.num.compose(i, replacement), self.den.compose(i, replacement), self.symbols)

    def extend(self, symbols: Sequence[str]) -> RationalForm:
        """Re-express over a larger symbol list that contains the current one."""
        symbols = tuple(symbols)
        num, den = self.num, self.den
        current = list(self.symbols)
        for pos, s in enumerate(symbols):
            if pos >= len(current) or current[pos] != s:
                if s in current:
                    raise ValueError("extend only inserts new symbols")
                num, den = num.insert(pos), den.insert(pos)
                current.insert(pos, s)
        return RationalForm(num, den, symbols)

    def restrict(self, symbols: Sequence[str]) -> RationalForm:
        """Drop symbols that do not occur."""
        num, den = self.num, self.den
        current = list(self.symbols)
        for s in list(current):
            if s not in symbols:
                i = current.index(s)
                num, den = num.drop(i), den.drop(i)
                current.pop(i)
        return RationalForm(num, den, tuple(current))

    # -- rendering --------------------------------------------------------

    def to_expr(self) -> Expr:
        numer = _poly_expr(self.num, self.symbols)
        if self.den.is_const() and self.den.const_value() == 1:
            return numer
        return Div(numer, _poly_expr(self.den, self.symbols))

    def __str__(self) -> str:
        return format_expr(self.to_expr())


def _monomial_expr(e: tuple, symbols: Sequence[str]) -> Expr | None:
    factors = []
    for s, k in zip(symbols, e):
        if k == 1:
            factors.append(Var(s))
        elif k > 1:
            factors.append(Pow(Var(s), k))
    if not factors:
        return None
    out = factors[0]
    for f in factors[1:]:
        out = Mul(out, f)
    return out


def _poly_expr(p: Poly, symbols: Sequence[str]) -> Expr:
    if p.is_zero():
        return Const(ZERO)
    # decreasing total degree, then lex
    items = sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    out: Expr | None = None
    for e, c in items:
        mono = _monomial_expr(e, symbols)
        negative = c.sign() < 0 and (out is not None or mono is not None)
        mag = -c if negative else c
        if mono is None:
            term: Expr = Const(mag)
        elif mag == 1:
            term = mono
        else:
            term = Mul(Const(mag), mono)
        if out is None:
            # a signed single-term digit reads better than a negation
            out = Mul(Const(c), mono) if negative and mag != 1 and len(c) == 1 else Neg(term) if negative else term
        else:
            out = Sub(out, term) if negative else Add(out, term)
    return out  # type: ignore[return-value]


def to_rational_form(e: Expr, symbols: Sequence[str] = ("x",)) -> RationalForm:
    """Bring an expression to canonical numerator/denominator form."""
    symbols = tuple(symbols)

    def walk(node: Expr) -> RationalForm:
        if isinstance(node, Const):
            return RationalForm.const(node.value, symbols)
        if isinstance(node, Var):
            if node.name not in symbols:
                raise NotRational(f"variable {node.name!r} is not one of {symbols}")
            return RationalForm.var(node.name, symbols)
        if isinstance(node, Add):
            return walk(node.left) + walk(node.right)
        if isinstance(node, Sub):
            return walk(node.left) - walk(node.right)
        if isinstance(node, Neg):
            return -walk(node.arg)
        if isinstance(node, Mul):
            return walk(node.left) * walk(node.right)
        if isinstance(node, Div):
            return walk(node.left) / walk(node.right)
        if isinstance(node, Pow):
            return walk(node.base) ** node.exp
        if isinstance(node, (Min, Max)):
            raise NotRational("min/max are not rational operations")
        raise TypeError(f"unknown expression node {type(node).__name__}")

    return walk(e)
