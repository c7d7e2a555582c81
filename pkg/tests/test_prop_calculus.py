"""Randomized checks of sums and derivatives against brute-force oracles (1000 cases each)."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gross.core import G, ONE, ZERO, GrossNumber, as_gross, compare, pow_nat
from gross.deriv import DerivKind, derivative_report, derivative_via_infinitesimal, numerical_deriv_interval
from gross.expr import Add, Const, Mul, Pow, Var
from gross.series import ExpSum, arithmetic_sum, geometric_sum
from gross.topo import Grid
from strategies import flat_numbers, polynomials, rationals

CASES = settings(max_examples=1000, deadline=None)


def termwise(coeffs: list[GrossNumber], x: GrossNumber) -> GrossNumber:
    """Oracle: sum of k * c_k * x^(k-1), computed term by term."""
    total = ZERO
    for k, c in enumerate(coeffs):
        if k:
            total = total + c * k * pow_nat(x, k - 1)
    return total


def termwise_coeffs(coeffs: list[GrossNumber]) -> list[GrossNumber]:
    return [c * k for k, c in enumerate(coeffs)][1:] or [ZERO]


def poly_expr(coeffs) -> object:
    e = Const(coeffs[0])
    for k, c in enumerate(coeffs[1:], start=1):
        e = Add(e, Mul(Const(c), Var("x") if k == 1 else Pow(Var("x"), k)))
    return e


small_points = st.one_of(
    rationals.map(as_gross),
    st.sampled_from(["G", "G^-1", "2G - 1", "3 + G^-2", "-G^2"]).map(lambda s: __import__("gross").parse_number(s)),
)


@CASES
@given(flat_numbers(2), flat_numbers(2), rationals, st.integers(1, 12), st.integers(0, 3))
def test_series_match_brute_force(a1, d, q, n, i0):
    brute = ZERO
    item = a1
    for _ in range(n):
        brute = brute + item
        item = item + d
    assert arithmetic_sum(a1, d, n) == brute
    assume(i0 <= n)
    brute_q = sum((Fraction(q) ** i for i in range(i0, n + 1)), Fraction(0))
    assert geometric_sum(q, n, i0) == ExpSum.of(brute_q)


@CASES
@given(st.integers(1, 10), rationals.filter(lambda v: v != 1))
def test_geometric_derivative_identity(n, x):
    closed = (1 + n * x ** (n + 1) - (n + 1) * x**n) / (1 - x) ** 2
    brute = sum((i * x ** (i - 1) for i in range(1, n + 1)), Fraction(0))
    assert closed == brute
    # the same value from differentiating sum x^i
    f = poly_expr([ONE] * (n + 1))
    assert derivative_via_infinitesimal(f, x) == closed


@CASES
@given(polynomials(6), small_points)
def test_power_rule(poly, x):
    coeffs, f = poly
    rep = derivative_report(f, x)
    assert rep.kind is DerivKind.UNIQUE
    assert rep.value == termwise(coeffs, x)
    assert rep.same_form
    # formula check: the reported derivative agrees with the termwise one at a second point
    y = x + 1
    assert rep.left_form.evaluate([y]) == termwise(coeffs, y)


@CASES
@given(polynomials(6), rationals)
def test_infinitesimal_step_matches_symbolic(poly, x):
    coeffs, f = poly
    assert derivative_via_infinitesimal(f, x) == termwise(coeffs, as_gross(x))


@CASES
@given(polynomials(2), rationals, st.integers(-5, 5))
def test_numerical_interval_contains_derivative(poly, x0, j):
    coeffs, f = poly
    step = G ** -1
    g = Grid(x0 - 1, x0 + 1, step)
    x = as_gross(x0) + j * step
    lo, hi = numerical_deriv_interval(f, g, x)
    exact = termwise(coeffs, x)
    assert compare(lo, exact) <= 0 <= compare(hi, exact)
