"""Sparse multivariate polynomials with GrossNumber coefficients.

Only what rational forms need: ring operations, substitution, exact
division under lex order, and a gcd via primitive pseudo-remainder
sequences.  Gross coefficients do not form a UFD (①-1 splits over
rational grosspowers), so the constant gcd is a heuristic: a monomial
coefficient is a unit, otherwise one coefficient must divide the other.
Callers always verify a gcd by exact division before cancelling it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .core import ONE, ZERO, GrossNumber, as_gross, div, from_power_map, normalize, pow_nat

__all__ = ["Poly", "poly_gcd", "divexact"]

# exact-division budget for coefficients when testing divisibility
_DIV_TERMS = 64


class Poly:
    __slots__ = ("nvars", "_t", "_hash", "_proj")

    def __init__(self, nvars: int, terms: Mapping[tuple, GrossNumber] | None = None):
        self.nvars = nvars
        self._t = {e: c for e, c in (terms or {}).items() if not c.is_zero()}
        self._hash = None
        self._proj = None

    @classmethod
    def _raw(cls, nvars: int, t: dict) -> Poly:
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj._t = t
        obj._hash = None
        obj._proj = None
        return obj

    @classmethod
    def const(cls, c, nvars: int) -> Poly:
        c = as_gross(c)
        return cls._raw(nvars, {} if c.is_zero() else {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_const(self) -> bool:
        return all(not any(e) for e in self._t)

    def const_value(self) -> GrossNumber:
        if not self._t:
            return ZERO
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return next(iter(self._t.values()))

    def degree(self, v: int) -> int:
        return max((e[v] for e in self._t), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def lead_exp(self) -> tuple:
        return max(self._t)

    def lead_coeff(self) -> GrossNumber:
        return self._t[max(self._t)] if self._t else ZERO

    def coeff_in(self, v: int, k: int) -> Poly:
        """Coefficient of ``var_v^k``, as a polynomial free of ``var_v``."""
        out = {}
        for e, c in self._t.items():
            if e[v] == k:
                e2 = list(e)
                e2[v] = 0
                out[tuple(e2)] = c
        return Poly._raw(self.nvars, out)

    def lead_in(self, v: int) -> Poly:
        return self.coeff_in(v, self.degree(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars and self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._t.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {{{', '.join(f'{e}: {c}' for e, c in sorted(self._t.items(), reverse=True))}}})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        out = dict(self._t)
        for e, c in other._t.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return Poly._raw(self.nvars, out)

    def __neg__(self) -> Poly:
        return Poly._raw(self.nvars, {e: -c for e, c in self._t.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if not self._t or not other._t:
            return Poly._raw(self.nvars, {})
        out: dict = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})

    def scale(self, c: GrossNumber) -> Poly:
        if c.is_zero():
            return Poly._raw(self.nvars, {})
        return Poly._raw(self.nvars, {e: v * c for e, v in self._t.items()})

    def shift(self, v: int, k: int) -> Poly:
        """Multiply by ``var_v^k``."""
        out = {}
        for e, c in self._t.items():
            e2 = list(e)
            e2[v] += k
            out[tuple(e2)] = c
        return Poly._raw(self.nvars, out)

    def __pow__(self, k: int) -> Poly:
        result = Poly.const(ONE, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- substitution -----------------------------------------------------

    def compose(self, v: int, q: Poly) -> Poly:
        """Replace ``var_v`` by the polynomial ``q``."""
        d = self.degree(v)
        if d <= 0:
            return self
        result = self.coeff_in(v, d)
        for k in range(d - 1, -1, -1):
            result = result * q + self.coeff_in(v, k)
        return result

    def subs(self, v: int, value: GrossNumber) -> Poly:
        """Evaluate ``var_v`` at ``value`` and drop it from the variable list."""
        out: dict = {}
        powers: dict[int, GrossNumber] = {}
        for e, c in self._t.items():
            k = e[v]
            if k not in powers:
                powers[k] = pow_nat(value, k)
            term = c * powers[k]
            if term.is_zero():
                continue
            e2 = e[:v] + e[v + 1 :]
            s = out.get(e2)
            out[e2] = term if s is None else s + term
        return Poly._raw(self.nvars - 1, {e: c for e, c in out.items() if not c.is_zero()})

    def drop(self, v: int) -> Poly:
        """Remove a variable that does not occur."""
        if self.degree(v) > 0:
            raise ValueError("variable still occurs")
        return Poly._raw(self.nvars - 1, {e[:v] + e[v + 1 :]: c for e, c in self._t.items()})

    def insert(self, v: int) -> Poly:
        """Add a new (absent) variable at position ``v``."""
        return Poly._raw(self.nvars + 1, {e[:v] + (0,) + e[v:]: c for e, c in self._t.items()})

    def evaluate(self, values: Sequence[GrossNumber]) -> GrossNumber:
        if all(v.is_rational() for v in values):
            fv = [v.to_fraction() for v in values]
            return self._evaluate_rational([int(v) if v.denominator == 1 else v for v in fv])
        raw: list = []
        cache: dict = {}
        for e, c in self._t.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = pow_nat(values[i], k)
                    term = term * cache[key]
            raw.extend(term.terms)
        return normalize(raw)

    def _projection(self) -> list:
        # per grosspower: a rational polynomial as integer numerators over one denominator
        if self._proj is None:
            by_power: dict = {}
            for e, c in self._t.items():
                for d, p in c.terms:
                    by_power.setdefault(p, []).append((e, d))
            order = from_power_map({p: 1 for p in by_power}).terms
            proj = []
            for _, p in order:
                monos = by_power[p]
                den = math.lcm(*(d.denominator for _, d in monos))
                proj.append((p, den, [(e, d.numerator * (den // d.denominator)) for e, d in monos]))
            self._proj = proj
        return self._proj

    def _evaluate_rational(self, values: Sequence) -> GrossNumber:
        # monomials are plain rationals, so each grosspower is summed separately
        powers: dict = {}
        items = []
        for p, den, monos in self._projection():
            total = 0
            for e, n in monos:
                m = n
                for i, k in enumerate(e):
                    if k:
                        key = (i, k)
                        if key not in powers:
                            powers[key] = values[i] ** k
                        m = m * powers[key]
                total += m
            if total:
                items.append((Fraction(total, den), p))
        return GrossNumber._trusted(tuple(items))


def _coeff_divexact(a: GrossNumber, b: GrossNumber) -> GrossNumber | None:
    q, exact = div(a, b, _DIV_TERMS)
    return q if exact else None


def divexact(a: Poly, b: Poly) -> Poly | None:
    """``a / b`` when ``b`` divides ``a`` exactly, else None."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return a
    lb = max(b._t)
    cb = b._t[lb]
    if len(b._t) == 1:
        out = {}
        for e, c in a._t.items():
            if any(x < y for x, y in zip(e, lb)):
                return None
            q = _coeff_divexact(c, cb)
            if q is None:
                return None
            out[tuple(x - y for x, y in zip(e, lb))] = q
        return Poly._raw(a.nvars, out)
    rem = dict(a._t)
    quot: dict = {}
    while rem:
        lr = max(rem)
        if any(x < y for x, y in zip(lr, lb)):
            return None
        c = _coeff_divexact(rem[lr], cb)
        if c is None:
            return None
        m = tuple(x - y for x, y in zip(lr, lb))
        quot[m] = c
        for e, bc in b._t.items():
            key = tuple(x + y for x, y in zip(e, m))
            val = rem.get(key, ZERO) - c * bc
            if val.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = val
    return Poly._raw(a.nvars, quot)


def _const_gcd(a: GrossNumber, b: GrossNumber) -> GrossNumber:
    # monomials are units; returning one normalizes the cofactor
    if a.is_monomial():
        return a
    if b.is_monomial():
        return b
    if _coeff_divexact(b, a) is not None:
        return a
    if _coeff_divexact(a, b) is not None:
        return b
    return ONE


def _content(p: Poly, v: int) -> Poly:
    g = None
    for k in range(p.degree(v), -1, -1):
        c = p.coeff_in(v, k)
        if c.is_zero():
            continue
        g = c if g is None else poly_gcd(g, c)
        if g.is_const() and g.const_value().is_monomial():
            break
    return g if g is not None else Poly.const(ONE, p.nvars)


def _primitive(p: Poly, v: int) -> Poly:
    c = _content(p, v)
    q = divexact(p, c)
    return q if q is not None else p


def _prem(a: Poly, b: Poly, v: int) -> Poly:
    db = b.degree(v)
    lcb = b.lead_in(v)
    r = a
    while not r.is_zero() and r.degree(v) >= db:
        dr = r.degree(v)
        lcr = r.lead_in(v)
        r = lcb * r - (lcr * b).shift(v, dr - db)
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """A common divisor, maximal up to the constant-gcd heuristic."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    n = a.nvars
    present = [i for i in range(n) if a.degree(i) > 0 or b.degree(i) > 0]
    if not present:
        return Poly.const(_const_gcd(a.const_value(), b.const_value()), n)
    v = present[-1]
    if a.degree(v) <= 0:
        return poly_gcd(a, _content(b, v))
    if b.degree(v) <= 0:
        return poly_gcd(_content(a, v), b)
    ca, cb = _content(a, v), _content(b, v)
    pa = divexact(a, ca) or a
    pb = divexact(b, cb) or b
    c = poly_gcd(ca, cb)
    if pa.degree(v) < pb.degree(v):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, v)
        if r.is_zero():
            g = pb
            break
        if r.degree(v) <= 0:
            g = Poly.const(ONE, n)
            break
        pa, pb = pb, _primitive(r, v)
    return c * _primitive(g, v)
