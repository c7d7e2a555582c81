"""Exact arithmetic over numbers written in the positional system with radix ①.

A :class:`GrossNumber` is a finite sum ``c_1 ①^p_1 + ... + c_k ①^p_k`` with
nonzero rational grossdigits ``c_i`` and strictly decreasing grosspowers
``p_i``.  Grosspowers are themselves gross numbers; when a grosspower is a
plain rational it is stored as a :class:`~fractions.Fraction` so that the
common case (finite exponents) never recurses.

Zero is the empty term sequence.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Union

from . import config
from .errors import DepthExceeded, DivisionByZero, TruncatedDivision

__all__ = [
    "Rational",
    "GrossNumber",
    "GrossTerm",
    "NumberClass",
    "ZERO",
    "ONE",
    "G",
    "normalize",
    "add",
    "neg",
    "sub",
    "mul",
    "div",
    "pow_nat",
    "mono_pow",
    "compare",
    "classify",
    "split",
    "as_gross",
]

Rational = Fraction
Power = Union[Fraction, "GrossNumber"]
_FZERO = Fraction(0)
_FONE = Fraction(1)


class GrossTerm(NamedTuple):
    digit: Fraction
    power: Power  # Fraction when rational, GrossNumber otherwise


class NumberClass(enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE = "finite"
    INFINITE = "infinite"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class GrossNumber:
    """An immutable, normalized gross number.

    Build one with :func:`normalize` (from raw ``(digit, power)`` pairs), with
    :func:`as_gross` (from ints and fractions), or by parsing text with
    :func:`gross.numeral.parse_number`.  Arithmetic operators accept ints and
    fractions on either side.
    """

    __slots__ = ("_terms", "_depth", "_hash")

    def __init__(self, terms: Iterable = ()):
        made = normalize(terms)
        self._terms = made._terms
        self._depth = made._depth
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, terms: tuple) -> GrossNumber:
        obj = object.__new__(cls)
        obj._terms = terms
        depth = 0
        for _, p in terms:
            if type(p) is not Fraction:
                d = p._depth + 1
                if d > depth:
                    depth = d
        obj._depth = depth
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[GrossTerm, ...]:
        return tuple(GrossTerm(d, p) for d, p in self._terms)

    @property
    def depth(self) -> int:
        return self._depth

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def leading_power(self) -> Power:
        if not self._terms:
            raise ValueError("zero has no leading grosspower")
        return self._terms[0][1]

    @property
    def leading_digit(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero has no leading grossdigit")
        return self._terms[0][0]

    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[0][0] > 0 else -1

    def is_rational(self) -> bool:
        """True when every term sits at grosspower 0 (or the number is zero)."""
        return not self._terms or (len(self._terms) == 1 and _is_zero_power(self._terms[0][1]))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def to_fraction(self) -> Fraction:
        if not self._terms:
            return _FZERO
        if self.is_rational():
            return self._terms[0][0]
        raise ValueError(f"{self!s} is not a plain rational")

    def finite_part(self) -> Fraction:
        for d, p in self._terms:
            if _is_zero_power(p):
                return d
        return _FZERO

    def is_integer_valued(self) -> bool:
        """No infinitesimal part and an integer finite part.

        Infinite terms are accepted as integers: ① is even, so counts such
        as ①/2 are whole numbers.
        """
        for d, p in self._terms:
            s = _power_sign(p)
            if s < 0:
                return False
            if s == 0 and d.denominator != 1:
                return False
        return True

    def classify(self) -> NumberClass:
        return classify(self)

    def split(self) -> tuple[GrossNumber, GrossNumber, GrossNumber]:
        return split(self)

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GrossNumber):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == as_gross(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else compare(self, other) >= 0

    def __neg__(self) -> GrossNumber:
        return neg(self)

    def __pos__(self) -> GrossNumber:
        return self

    def __abs__(self) -> GrossNumber:
        return neg(self) if self.sign() < 0 else self

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(other, self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k >= 0:
            return pow_nat(self, k)
        return exact_div(ONE, pow_nat(self, -k))

    def __str__(self) -> str:
        from .numeral import format_number

        return format_number(self)

    def __repr__(self) -> str:
        return f"GrossNumber({str(self)!r})"


def _coerce(x) -> GrossNumber | None:
    if isinstance(x, GrossNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return as_gross(x)
    return None


def as_gross(x) -> GrossNumber:
    """Lift an int, Fraction or decimal string to a (finite) gross number."""
    if isinstance(x, GrossNumber):
        return x
    r = _frac(x)
    if r == 0:
        return ZERO
    return GrossNumber._trusted(((r, _FZERO),))


# -- grosspower helpers -------------------------------------------------------


def _is_zero_power(p: Power) -> bool:
    return type(p) is Fraction and p == 0


def _lift(p: Power) -> GrossNumber:
    if type(p) is Fraction:
        return as_gross(p)
    return p


def _canon_power(p) -> Power:
    """Store rational grosspowers as Fractions, everything else as GrossNumber."""
    if isinstance(p, GrossNumber):
        t = p._terms
        if not t:
            return _FZERO
        if len(t) == 1 and _is_zero_power(t[0][1]):
            return t[0][0]
        return p
    return _frac(p)


def _power_sign(p: Power) -> int:
    if type(p) is Fraction:
        return (p > 0) - (p < 0)
    return p.sign()


def _pcmp(p: Power, q: Power) -> int:
    if type(p) is Fraction and type(q) is Fraction:
        return (p > q) - (p < q)
    return compare(_lift(p), _lift(q))


def _padd(p: Power, q: Power) -> Power:
    if type(p) is Fraction and type(q) is Fraction:
        return p + q
    return _canon_power(add(_lift(p), _lift(q)))


def _psub(p: Power, q: Power) -> Power:
    if type(p) is Fraction and type(q) is Fraction:
        return p - q
    return _canon_power(sub(_lift(p), _lift(q)))


def _pscale(p: Power, k: Fraction) -> Power:
    if type(p) is Fraction:
        return p * k
    return _canon_power(mul(p, as_gross(k)))


# -- operations ---------------------------------------------------------------


def normalize(raw_terms: Iterable) -> GrossNumber:
    """Merge equal grosspowers, drop zero digits, sort by decreasing power.

    ``raw_terms`` holds ``(digit, power)`` pairs; digits may be ints or
    Fractions and powers may be ints, Fractions or GrossNumbers.
    """
    limit = config.MAX_DEPTH
    acc: dict = {}
    for digit, power in raw_terms:
        d = _frac(digit)
        p = _canon_power(power)
        if type(p) is not Fraction and p._depth >= limit:
            raise DepthExceeded(f"grosspower nesting depth {p._depth + 1} exceeds the limit {limit}")
        acc[p] = acc.get(p, _FZERO) + d
    return from_power_map(acc)


def from_power_map(acc: dict) -> GrossNumber:
    """Build a number from a power -> digit map whose powers are already canonical."""
    items = [(d, p) for p, d in acc.items() if d != 0]
    if all(type(p) is Fraction for _, p in items):
        items.sort(key=lambda t: t[1], reverse=True)
    else:
        items.sort(key=cmp_to_key(lambda s, t: _pcmp(t[1], s[1])))
    return GrossNumber._trusted(tuple(items))


def add(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    if not a._terms:
        return b
    if not b._terms:
        return a
    if a._depth == 0 and b._depth == 0:
        acc = dict((p, d) for d, p in a._terms)
        for d, p in b._terms:
            acc[p] = acc.get(p, _FZERO) + d
        return from_power_map(acc)
    return normalize(a._terms + b._terms)


def neg(a: GrossNumber) -> GrossNumber:
    return GrossNumber._trusted(tuple((-d, p) for d, p in a._terms))


def sub(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    return add(a, neg(b))


def mul(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    if not a._terms or not b._terms:
        return ZERO
    if len(b._terms) == 1:
        db, pb = b._terms[0]
        if db == 1 and _is_zero_power(pb):
            return a
        if type(pb) is Fraction and a._depth == 0:
            # a rational shift of rational powers keeps the order; no merging
            return GrossNumber._trusted(tuple((d * db, p + pb) for d, p in a._terms))
        return normalize((d * db, _padd(p, pb)) for d, p in a._terms)
    if len(a._terms) == 1:
        return mul(b, a)
    if a._depth == 0 and b._depth == 0:
        acc: dict = {}
        for da, pa in a._terms:
            for db, pb in b._terms:
                p = pa + pb
                acc[p] = acc.get(p, _FZERO) + da * db
        return from_power_map(acc)
    return normalize((da * db, _padd(pa, pb)) for da, pa in a._terms for db, pb in b._terms)


def div(a: GrossNumber, b: GrossNumber, max_terms: int | None = None) -> tuple[GrossNumber, bool]:
    """Long division by leading terms.

    Returns ``(quotient, exact)``.  When ``exact`` is False the quotient holds
    ``max_terms`` terms and the next term it would have produced is strictly
    smaller than its last one.
    """
    if not b._terms:
        raise DivisionByZero("division by zero")
    if not a._terms:
        return ZERO, True
    if max_terms is None:
        max_terms = config.MAX_TERMS
    lead_d, lead_p = b._terms[0]
    if len(b._terms) == 1:
        inv = normalize([(1 / lead_d, _pscale(lead_p, Fraction(-1)))])
        return mul(a, inv), True
    quotient = []
    rem = a
    while rem._terms and len(quotient) < max_terms:
        d, p = rem._terms[0]
        step = normalize([(d / lead_d, _psub(p, lead_p))])
        quotient.append(step._terms[0])
        rem = sub(rem, mul(step, b))
    return GrossNumber._trusted(tuple(quotient)), not rem._terms


def exact_div(a: GrossNumber, b: GrossNumber, max_terms: int | None = None) -> GrossNumber:
    """Divide, raising :class:`TruncatedDivision` if no finite quotient exists."""
    q, exact = div(a, b, max_terms)
    if not exact:
        raise TruncatedDivision(f"({a}) / ({b}) has no finite expansion; truncated to {q}", q)
    return q


def pow_nat(a: GrossNumber, k: int) -> GrossNumber:
    if k < 0:
        raise ValueError("pow_nat needs a natural exponent")
    result = ONE
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def mono_pow(p) -> GrossNumber:
    """The single-term number 1·①^p."""
    return normalize([(_FONE, p)])


def compare(a: GrossNumber, b: GrossNumber) -> int:
    """Total order: the sign of the leading term of ``a - b`` (-1, 0 or 1)."""
    ta, tb = a._terms, b._terms
    i = 0
    while True:
        if i == len(ta):
            if i == len(tb):
                return 0
            return -1 if tb[i][0] > 0 else 1
        if i == len(tb):
            return 1 if ta[i][0] > 0 else -1
        da, pa = ta[i]
        db, pb = tb[i]
        c = _pcmp(pa, pb)
        if c > 0:
            return 1 if da > 0 else -1
        if c < 0:
            return -1 if db > 0 else 1
        if da != db:
            return 1 if da > db else -1
        i += 1


def classify(a: GrossNumber) -> NumberClass:
    if not a._terms:
        return NumberClass.ZERO
    s = _power_sign(a._terms[0][1])
    if s > 0:
        return NumberClass.INFINITE
    if s < 0:
        return NumberClass.INFINITESIMAL
    return NumberClass.FINITE


def split(a: GrossNumber) -> tuple[GrossNumber, GrossNumber, GrossNumber]:
    """Return ``(infinite_part, finite_part, infinitesimal_part)``."""
    parts: tuple[list, list, list] = ([], [], [])
    for t in a._terms:
        s = _power_sign(t[1])
        parts[0 if s > 0 else 1 if s == 0 else 2].append(t)
    return tuple(GrossNumber._trusted(tuple(p)) for p in parts)  # type: ignore[return-value]


ZERO = GrossNumber._trusted(())
ONE = GrossNumber._trusted(((_FONE, _FZERO),))
G = GrossNumber._trusted(((_FONE, _FONE),))
