"""Discrete domains, units of measure and continuity relative to a unit.

A set of points is continuous in a unit when every gap between neighbors,
measured in that unit, is infinitesimal; it is discrete when none is.  The
same test applied to differences of function values gives continuity of a
function at a point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Iterable, Sequence

from .core import G, ONE, ZERO, GrossNumber, NumberClass, as_gross, classify, compare, div, mono_pow
from .errors import BudgetExceeded, InexactConversion, InvalidDomain, OffGrid
from .expr import Expr, PiecewiseFunc

__all__ = [
    "Grid",
    "Unit",
    "Verdict",
    "ContinuityVerdict",
    "PointReport",
    "OverReport",
    "neighbors",
    "convert_unit",
    "set_continuity",
    "points_continuity",
    "func_continuity_at",
    "func_continuity_over",
    "sequence_reach",
    "ENUMERATION_BUDGET",
]

ENUMERATION_BUDGET = 10_000


@dataclass(frozen=True)
class Unit:
    """A unit of measure given as a multiple of the ambient unit."""

    factor: GrossNumber = ONE

    def __post_init__(self):
        object.__setattr__(self, "factor", as_gross(self.factor))
        if compare(self.factor, ZERO) <= 0:
            raise InvalidDomain(f"unit factor must be positive, got {self.factor}")


AMBIENT = Unit(ONE)


@dataclass(frozen=True)
class Grid:
    """Equidistant points ``a, a+step, ..., b``."""

    a: GrossNumber
    b: GrossNumber
    step: GrossNumber

    def __post_init__(self):
        for name in ("a", "b", "step"):
            object.__setattr__(self, name, as_gross(getattr(self, name)))
        if compare(self.step, ZERO) <= 0:
            raise InvalidDomain(f"grid step must be positive, got {self.step}")
        if compare(self.a, self.b) >= 0:
            raise InvalidDomain(f"grid needs a < b, got [{self.a}, {self.b}]")
        n = self._index(self.b)
        if n is None:
            raise InvalidDomain(f"({self.b} - {self.a}) / {self.step} is not a whole number of steps")

    def _index(self, x: GrossNumber) -> GrossNumber | None:
        q, exact = div(x - self.a, self.step)
        if not exact or not q.is_integer_valued() or compare(q, ZERO) < 0:
            return None
        return q

    @property
    def intervals(self) -> GrossNumber:
        """Number of steps from a to b."""
        return self._index(self.b)  # type: ignore[return-value]

    def contains(self, x) -> bool:
        x = as_gross(x)
        return compare(x, self.b) <= 0 and self._index(x) is not None

    def points(self, budget: int = ENUMERATION_BUDGET) -> Iterable[GrossNumber]:
        n = self.intervals
        if not n.is_rational() or n.to_fraction() + 1 > budget:
            raise BudgetExceeded(f"grid has {n} + 1 points; enumeration budget is {budget}")
        x = self.a
        for _ in range(int(n.to_fraction()) + 1):
            yield x
            x = x + self.step


def neighbors(g: Grid, x) -> tuple[GrossNumber | None, GrossNumber | None]:
    """Closest grid points to the left and right of ``x`` (None past an end)."""
    x = as_gross(x)
    if not g.contains(x):
        raise OffGrid(f"{x} is not a point of the grid [{g.a}, {g.b}] with step {g.step}")
    left = None if x == g.a else x - g.step
    right = None if x == g.b else x + g.step
    return left, right


def convert_unit(v, src: Unit, dst: Unit) -> GrossNumber:
    """Re-express a measurement taken in ``src`` in the unit ``dst``."""
    v = as_gross(v)
    q, exact = div(v * src.factor, dst.factor)
    if not exact:
        raise InexactConversion(f"{v} in unit {src.factor} has no finite form in unit {dst.factor}")
    return q


def _infinitesimal(v: GrossNumber) -> bool:
    # zero differences count as infinitesimally small
    return v.is_zero() or classify(v) is NumberClass.INFINITESIMAL


class Verdict(enum.Enum):
    CONTINUOUS = "continuous"
    DISCRETE = "discrete"
    MIXED = "mixed"


@dataclass(frozen=True)
class ContinuityVerdict:
    kind: Verdict
    order: GrossNumber | None = None

    def __str__(self) -> str:
        if self.kind is Verdict.CONTINUOUS:
            return f"continuous, order {self.order}"
        return self.kind.value


def _gap_verdict(gaps: Sequence[GrossNumber], u: Unit) -> ContinuityVerdict:
    converted = [convert_unit(gap, AMBIENT, u) for gap in gaps]
    small = [_infinitesimal(c) for c in converted]
    if all(small):
        largest = max(converted, key=cmp_to_key(compare))
        return ContinuityVerdict(Verdict.CONTINUOUS, mono_pow(largest.leading_power))
    if not any(small):
        return ContinuityVerdict(Verdict.DISCRETE)
    return ContinuityVerdict(Verdict.MIXED)


def set_continuity(g: Grid, u: Unit = AMBIENT) -> ContinuityVerdict:
    """Classify a uniform grid; one gap decides."""
    return _gap_verdict([g.step], u)


def points_continuity(points: Sequence, u: Unit = AMBIENT) -> ContinuityVerdict:
    """Classify an explicit increasing list of points gap by gap."""
    pts = [as_gross(p) for p in points]
    if len(pts) < 2:
        raise InvalidDomain("need at least two points")
    gaps = []
    for lo, hi in zip(pts, pts[1:]):
        gap = hi - lo
        if compare(gap, ZERO) <= 0:
            raise InvalidDomain("points must be strictly increasing")
        gaps.append(gap)
    return _gap_verdict(gaps, u)


@dataclass(frozen=True)
class PointReport:
    """Function continuity at one grid point.

    ``left`` is f(x) - f(x-) and ``right`` is f(x) - f(x+), both in the
    value unit; either is None when the neighbor lies outside the grid.
    """

    x: GrossNumber
    left: GrossNumber | None
    right: GrossNumber | None
    left_continuous: bool | None
    right_continuous: bool | None

    @property
    def continuous(self) -> bool:
        # an end point has one side only
        return all(s for s in (self.left_continuous, self.right_continuous) if s is not None)


def _as_func(f: PiecewiseFunc | Expr) -> PiecewiseFunc:
    return f if isinstance(f, PiecewiseFunc) else PiecewiseFunc.single(f)


def func_continuity_at(f: PiecewiseFunc | Expr, g: Grid, x, u: Unit = AMBIENT, u2: Unit | None = None) -> PointReport:
    """Check f(x) - f(x-) and f(x) - f(x+) for infinitesimality.

    ``u`` measures the argument axis and, unless ``u2`` is given, the value
    axis too.
    """
    f = _as_func(f)
    x = as_gross(x)
    vu = u2 if u2 is not None else u
    lo, hi = neighbors(g, x)
    fx = f(x)
    left = right = None
    lc = rc = None
    if lo is not None:
        left = convert_unit(fx - f(lo), AMBIENT, vu)
        lc = _infinitesimal(left)
    if hi is not None:
        right = convert_unit(fx - f(hi), AMBIENT, vu)
        rc = _infinitesimal(right)
    return PointReport(x, left, right, lc, rc)


@dataclass(frozen=True)
class OverReport:
    continuous: bool
    checked: tuple[PointReport, ...] = field(default_factory=tuple)
    witness: PointReport | None = None


def func_continuity_over(
    f: PiecewiseFunc | Expr,
    g: Grid,
    u: Unit = AMBIENT,
    monotone: bool = False,
    budget: int = ENUMERATION_BUDGET,
    u2: Unit | None = None,
) -> OverReport:
    """Continuity at every grid point.

    With ``monotone`` the caller vouches that the largest jumps of f sit at
    the ends of the grid (true for a monotone convex or concave f), so only
    the two end points are checked, ``b`` first.  Without it the grid must
    be small enough to enumerate.
    """
    if monotone:
        candidates: Iterable[GrossNumber] = (g.b, g.a)
    else:
        candidates = g.points(budget)
    checked = []
    for x in candidates:
        rep = func_continuity_at(f, g, x, u, u2)
        checked.append(rep)
        if not rep.continuous:
            return OverReport(False, tuple(checked), rep)
    return OverReport(True, tuple(checked))


def sequence_reach(start) -> GrossNumber:
    """Largest element a complete sequence of consecutive integers from ``start`` reaches."""
    start = as_gross(start)
    if not start.is_integer_valued():
        raise InvalidDomain(f"sequence start must be integer-valued, got {start}")
    return start + G - 1
