"""Sums with explicitly given (finite or infinite) item counts.

Geometric sums with an infinite count produce values like ``3^(①²+1)`` that
have no positional form; those live in :class:`ExpSum`, a sum of
``coeff · base^exponent`` terms plus an ordinary gross-number tail.

Canonical form: bases are rationals greater than 1 (``(1/2)^n`` is stored as
``2^(-n)``), and two terms of one base whose exponents differ by an integer
are merged.  Internally a term is keyed by its exponent with the integer
part of the finite digit removed; the printed exponent pulls whole powers
of the base back out of the coefficient, so ``1.5 · 3^(①²)`` prints as
``0.5*3^(G^2 + 1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import ONE, ZERO, GrossNumber, as_gross, classify, compare, NumberClass, pow_nat
from .errors import BadRadix, IncomparableExpSum, InvalidDomain, MixedBase, NonPositiveCount, UnsupportedRatio
from .numeral import format_digit, format_number

__all__ = [
    "ExpTerm",
    "ExpSum",
    "arithmetic_sum",
    "repeated_sum",
    "geometric_sum",
    "compare_same_base",
    "PointSet",
    "count_points",
    "repeating_digits",
]


@dataclass(frozen=True)
class ExpTerm:
    """``coeff · base^exponent`` with ``base > 1``.

    ``coeff`` is a GrossNumber so that counts such as ``2① · 10^①`` fit in a
    single term; plain rationals are the common case.
    """

    coeff: GrossNumber
    base: Fraction
    exponent: GrossNumber


def _split_exponent(e: GrossNumber) -> tuple[GrossNumber, int]:
    """``e = key + shift`` with ``shift`` an integer and the key's finite digit in [0, 1)."""
    f = e.finite_part()
    shift = math.floor(f)
    if shift == 0:
        return e, 0
    return e - shift, shift


def _rational_pow(base: Fraction, k: int) -> Fraction:
    return base**k


def _valuation(c: GrossNumber, base: Fraction) -> int:
    """How many whole factors of an integer base divide every grossdigit."""
    if base.denominator != 1 or c.is_zero():
        return 0
    b = base.numerator
    best = None
    for d, _ in c._terms:
        v = 0
        num, den = abs(d.numerator), d.denominator
        while num % b == 0:
            num //= b
            v += 1
        if v == 0:
            while den % b == 0:
                den //= b
                v -= 1
        best = v if best is None else min(best, v)
    return best or 0


def _is_integer_rational(e: GrossNumber) -> bool:
    return e.is_rational() and e.to_fraction().denominator == 1


class ExpSum:
    """Immutable sum of exponential terms plus a GrossNumber tail."""

    __slots__ = ("_terms", "tail")

    def __init__(self, terms: dict | None = None, tail: GrossNumber = ZERO):
        # terms: {(base, key): coeff} already canonical
        self._terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}
        self.tail = as_gross(tail)

    # -- construction -----------------------------------------------------

    @classmethod
    def of(cls, value) -> ExpSum:
        if isinstance(value, ExpSum):
            return value
        return cls({}, as_gross(value))

    @classmethod
    def power(cls, base, exponent, coeff=ONE) -> ExpSum:
        """``coeff · base^exponent`` for a positive rational base."""
        base = Fraction(base)
        exponent = as_gross(exponent)
        coeff = as_gross(coeff)
        if base <= 0:
            raise UnsupportedRatio(f"exponential base must be positive, got {base}")
        if coeff.is_zero():
            return cls()
        if base == 1 or exponent.is_zero():
            return cls({}, coeff)
        if base < 1:
            base, exponent = 1 / base, -exponent
        if _is_integer_rational(exponent):
            return cls({}, coeff * as_gross(_rational_pow(base, int(exponent.to_fraction()))))
        key, shift = _split_exponent(exponent)
        return cls({(base, key): coeff * as_gross(_rational_pow(base, shift))}, ZERO)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms and self.tail.is_zero()

    def is_gross(self) -> bool:
        """True when the value collapsed into the tail."""
        return not self._terms

    @property
    def bases(self) -> set[Fraction]:
        return {b for b, _ in self._terms}

    def terms(self) -> list[ExpTerm]:
        """Display-normalized terms in printing order."""
        return [t for _, t in self._ordered()]

    def _display(self, base: Fraction, key: GrossNumber, c: GrossNumber) -> ExpTerm:
        j = _valuation(c, base)
        if j:
            c = c * as_gross(_rational_pow(base, -j))
            key = key + j
        return ExpTerm(c, base, key)

    def _ordered(self) -> list[tuple[int, ExpTerm]]:
        items = []
        for (base, key), c in self._terms.items():
            cls = classify(key)
            group = 0 if cls is NumberClass.INFINITE and key.sign() > 0 else 2
            items.append((group, base, key, c))

        def sort_key(item):
            return item[0], item[1]

        items.sort(key=sort_key)
        # within a (group, base) run: decreasing exponent
        out = []
        i = 0
        while i < len(items):
            j = i
            while j < len(items) and items[j][:2] == items[i][:2]:
                j += 1
            run = sorted(items[i:j], key=_cmp_key)
            out.extend((g, self._display(b, k, c)) for g, b, k, c in run)
            i = j
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> ExpSum:
        other = ExpSum.of(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return ExpSum(out, self.tail + other.tail)

    __radd__ = __add__

    def __neg__(self) -> ExpSum:
        return ExpSum({k: -c for k, c in self._terms.items()}, -self.tail)

    def __sub__(self, other) -> ExpSum:
        return self + (-ExpSum.of(other))

    def __rsub__(self, other) -> ExpSum:
        return ExpSum.of(other) - self

    def scale(self, c) -> ExpSum:
        c = as_gross(c)
        return ExpSum({k: v * c for k, v in self._terms.items()}, self.tail * c)

    def __mul__(self, other) -> ExpSum:
        if isinstance(other, ExpTerm):
            return self.mul_term(other)
        if isinstance(other, (int, Fraction, GrossNumber)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def mul_term(self, t: ExpTerm) -> ExpSum:
        """Multiply by one exponential term; bases must agree."""
        if t.base < 1:
            t = ExpTerm(t.coeff, 1 / Fraction(t.base), -as_gross(t.exponent))
        result = ExpSum.power(t.base, t.exponent, t.coeff * self.tail)
        for (base, key), c in self._terms.items():
            if base != t.base:
                raise MixedBase(f"cannot multiply {base}^... by {t.base}^...")
            result = result + ExpSum.power(base, key + t.exponent, c * t.coeff)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GrossNumber)):
            other = ExpSum.of(other)
        if not isinstance(other, ExpSum):
            return NotImplemented
        return self._terms == other._terms and self.tail == other.tail

    def __hash__(self) -> int:
        return hash((frozenset(self._terms.items()), self.tail))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return format_expsum(self)

    def __repr__(self) -> str:
        return f"ExpSum({str(self)!r})"


def _cmp_key(item):
    from functools import cmp_to_key

    return cmp_to_key(lambda a, b: compare(b, a))(item[2])


def _format_coeff(c: GrossNumber) -> str:
    if len(c) > 1:
        return f"({format_number(c)})"
    return format_number(c)


def _format_base(b: Fraction) -> str:
    return format_digit(b) if b.denominator == 1 else f"({format_digit(b)})"


def format_expsum(s: ExpSum) -> str:
    """``coeff*base^(exponent)`` pieces joined by ``" + "``.

    Pieces appear by decreasing magnitude: terms with a positive infinite
    exponent, then the tail, then the remaining exponential terms.
    """
    parts = []
    ordered = s._ordered()
    for group, t in ordered:
        if group == 0:
            parts.append(f"{_format_coeff(t.coeff)}*{_format_base(t.base)}^({format_number(t.exponent)})")
    if not s.tail.is_zero():
        parts.append(format_number(s.tail))
    for group, t in ordered:
        if group != 0:
            parts.append(f"{_format_coeff(t.coeff)}*{_format_base(t.base)}^({format_number(t.exponent)})")
    return " + ".join(parts) if parts else "0"


def _finite_powers_only(g: GrossNumber) -> bool:
    return all(type(p) is Fraction for _, p in g._terms)


def compare_same_base(a: ExpSum, b: ExpSum) -> int:
    """Order two ExpSums whose exponential terms share one base > 1.

    A term with a positive infinite exponent outweighs any tail whose
    grosspowers are finite; a term with a negative infinite exponent is
    outweighed by any nonzero such tail.  Terms whose exponents differ only
    by a finite amount cannot always be ordered exactly and raise
    :class:`IncomparableExpSum`.
    """
    d = ExpSum.of(a) - ExpSum.of(b)
    bases = d.bases
    if len(bases) > 1:
        raise MixedBase(f"cannot compare sums over bases {sorted(bases)}")
    if not d._terms:
        return compare(d.tail, ZERO)
    if not _finite_powers_only(d.tail):
        raise IncomparableExpSum("tail has infinite grosspowers; no order against exponential terms")
    keyed = sorted(d._terms.items(), key=lambda kv: _cmp_key((None, None, kv[0][1])))
    (_, top_key), top_c = keyed[0]
    if len(keyed) > 1:
        (_, next_key), _ = keyed[1]
        if classify(top_key - next_key) is not NumberClass.INFINITE:
            raise IncomparableExpSum("exponents differ by a finite non-integer amount")
    if classify(top_key) is NumberClass.INFINITE and top_key.sign() > 0:
        return top_c.sign()
    if not d.tail.is_zero():
        if classify(top_key) is NumberClass.INFINITE:
            return d.tail.sign()
        raise IncomparableExpSum("finite irrational exponential term against a rational tail")
    if classify(top_key) is NumberClass.INFINITE:
        return top_c.sign()
    raise IncomparableExpSum("finite irrational exponential terms")


# -- sums ---------------------------------------------------------------------


def _check_count(n: GrossNumber, what: str = "count") -> GrossNumber:
    n = as_gross(n)
    if compare(n, ZERO) <= 0:
        raise NonPositiveCount(f"{what} must be positive, got {n}")
    if not n.is_integer_valued():
        raise NonPositiveCount(f"{what} must be integer-valued, got {n}")
    return n


def arithmetic_sum(a1, d, n) -> GrossNumber:
    """``a1 + (a1+d) + ... `` over ``n`` items: ``(n/2)(2 a1 + (n-1) d)``."""
    n = _check_count(n)
    a1, d = as_gross(a1), as_gross(d)
    return n * Fraction(1, 2) * (2 * a1 + (n - 1) * d)


def repeated_sum(item, count) -> GrossNumber:
    count = _check_count(count)
    return as_gross(item) * count


def _power_of(q: Fraction, e: GrossNumber) -> ExpSum:
    """``q^e`` for a rational ratio and an integer-valued exponent ``e >= 1``."""
    if q == 0:
        return ExpSum()
    if q > 0:
        return ExpSum.power(q, e)
    if e.is_rational():
        k = int(e.to_fraction())
        return ExpSum.of(as_gross(q**k))
    raise UnsupportedRatio("a negative ratio raised to an infinite count has no determined sign")


def geometric_sum(q, n, i0: int = 0) -> ExpSum:
    """``sum q^i`` for ``i = i0 .. n`` with a finite or infinite ``n``."""
    n = _check_count(n)
    if i0 < 0:
        raise InvalidDomain("the first index must be a natural number")
    if isinstance(q, GrossNumber):
        if q.is_rational():
            q = q.to_fraction()
        elif q.is_monomial():
            return _geometric_monomial(q, n, i0)
        else:
            raise UnsupportedRatio(f"ratio {q} has several terms; q^(n+1) is not representable")
    q = Fraction(q)
    if n.is_rational() and n.to_fraction() < i0:
        return ExpSum()
    if q == 1:
        return ExpSum.of(n + 1 - i0)
    head = ExpSum.of(as_gross(q**i0))
    last = _power_of(q, n + 1)
    return (head - last).scale(as_gross(1 / (1 - q)))


def _geometric_monomial(q: GrossNumber, n: GrossNumber, i0: int) -> ExpSum:
    if not n.is_rational():
        raise UnsupportedRatio(f"sum of {q}^i over an infinite count has infinitely many positional terms")
    total = ZERO
    term = pow_nat(q, i0)
    for _ in range(i0, int(n.to_fraction()) + 1):
        total = total + term
        term = term * q
    return ExpSum.of(total)


def repeating_digits(integer, digit: int, count, radix: int = 10) -> ExpSum:
    """The numeral ``integer.ddd...d`` with ``count`` copies of ``digit`` after the point."""
    if radix < 2:
        raise BadRadix(f"radix must be at least 2, got {radix}")
    if not 0 <= digit < radix:
        raise InvalidDomain(f"digit {digit} out of range for radix {radix}")
    frac = geometric_sum(Fraction(1, radix), count, 1).scale(as_gross(digit))
    return ExpSum.of(integer) + frac


# -- point counts -----------------------------------------------------------------


class PointSet(enum.Enum):
    UNIT_INTERVAL_GROSSONE = "unit_interval_grossone"
    RAY_GROSSONE = "ray_grossone"
    LINE_GROSSONE = "line_grossone"
    LINE_GROSSONE_CLOSED = "line_grossone_closed"
    UNIT_INTERVAL_POSITIONAL = "unit_interval_positional"
    LINE_POSITIONAL_UNITS = "line_positional_units"
    REALS_POSITIONAL = "reals_positional"


_POSITIONAL = {PointSet.UNIT_INTERVAL_POSITIONAL, PointSet.LINE_POSITIONAL_UNITS, PointSet.REALS_POSITIONAL}


def count_points(kind: PointSet | str, radix: int | None = None) -> ExpSum:
    """Number of points expressible in each of the counting schemes."""
    from .core import G

    kind = PointSet(kind)
    if kind in _POSITIONAL:
        if radix is None or radix < 2:
            raise BadRadix(f"radix must be an integer >= 2, got {radix}")
    if kind is PointSet.UNIT_INTERVAL_GROSSONE:
        return ExpSum.of(G)
    if kind is PointSet.RAY_GROSSONE:
        return ExpSum.of(G * G)
    if kind is PointSet.LINE_GROSSONE:
        return ExpSum.of(2 * G * G)
    if kind is PointSet.LINE_GROSSONE_CLOSED:
        return ExpSum.of(2 * G * G + 1)
    if kind is PointSet.UNIT_INTERVAL_POSITIONAL:
        return ExpSum.power(radix, G)
    if kind is PointSet.LINE_POSITIONAL_UNITS:
        return ExpSum.power(radix, G, 2 * G)
    return ExpSum.power(radix, 2 * G)


def iter_kinds() -> Iterator[str]:
    return (k.value for k in PointSet)
