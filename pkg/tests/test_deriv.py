from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gross.core import G, compare
from gross.deriv import (
    DerivKind,
    FormulaStatus,
    Side,
    derivative_report,
    derivative_via_infinitesimal,
    formulae_continuity_at,
    numerical_deriv_interval,
    relative_difference,
    side_derivative,
    side_derivative_form,
    tilde,
)
from gross.errors import FormulaError, FormulaeDiscontinuous, NotFactorable, NotPolynomial, OffGrid, UndefinedAtZero
from gross.expr import evaluate, format_expr, load_function, parse_expr, parse_function
from gross.numeral import parse_number
from gross.topo import Grid
from strategies import polynomials

N = parse_number
E = parse_expr
GOLDEN = Path(__file__).parent / "golden"
AUX = settings(max_examples=200, deadline=None)


def fn(name: str):
    return load_function(GOLDEN / name)


# -- relative differences --------------------------------------------------------


@pytest.mark.parametrize(
    "f, side, form, derivative",
    [
        ("x^2", "right", "2*x + r", "2*x"),
        ("x^2", "left", "2*x - l", "2*x"),
        ("25*x^-1", "right", "-25/(x^2 + x*r)", "-25/x^2"),
        ("x^3", "right", "3*x^2 + 3*x*r + r^2", "3*x^2"),
        ("3*x + 1", "left", "3", "3"),
        ("x + 0", "right", "1", "1"),
    ],
)
def test_relative_difference(f, side, form, derivative):
    rd = relative_difference(E(f), side)
    assert str(rd) == form
    assert format_expr(side_derivative(rd)) == derivative


@pytest.mark.parametrize("f, expected", [("x^2", "r"), ("x^3", "3*x*r + r^2"), ("7*x - 2", "0"), ("G*x", "0")])
def test_tilde(f, expected):
    rd = relative_difference(E(f), Side.RIGHT)
    assert format_expr(tilde(rd, side_derivative(rd))) == expected


def test_relative_difference_uses_the_side_formula():
    f = fn("abs.gfn")
    assert str(relative_difference(f, "left")) == "-1"
    assert str(relative_difference(f, "right")) == "1"


def test_non_rational_formula_is_not_factorable():
    with pytest.raises(NotFactorable):
        relative_difference(E("max(x, 0)"), "right")


def test_pole_at_zero_step():
    rd = relative_difference(E("1/(x - 1)"), "right")
    assert side_derivative_form(rd).evaluate([3]) == Fraction(-1, 4)
    # a form whose denominator is the step itself
    from gross.deriv import RelDiff
    from gross.ratform import to_rational_form

    bad = RelDiff(Side.RIGHT, to_rational_form(E("1/r"), ("x", "r")))
    with pytest.raises(UndefinedAtZero):
        side_derivative(bad)


@AUX
@given(polynomials(4), st.sampled_from(["G", "G^-1", "3 - G^-2", "2G + 1", "-G^2"]).map(N), st.sampled_from(["G^-1", "G^-3", "1/2", "G"]).map(N))
def test_factorization_identity_at_gross_points(poly, x, h):
    _, f = poly
    for side in (Side.LEFT, Side.RIGHT):
        rd = relative_difference(f, side)
        if side is Side.RIGHT:
            delta = evaluate(f, x + h) - evaluate(f, x)
        else:
            delta = evaluate(f, x) - evaluate(f, x - h)
        assert delta == h * rd.form.evaluate([x, h])


# -- formula continuity ----------------------------------------------------------


@pytest.mark.parametrize(
    "name, x, status",
    [
        ("removable_gap.gfn", 1, FormulaStatus.CONTINUOUS),
        ("removable_gap_shifted.gfn", 1, FormulaStatus.DISCONTINUOUS),
        ("jump_at_grossone.gfn", G, FormulaStatus.DISCONTINUOUS),
        ("max14x.gfn", 0, FormulaStatus.LEFT_ONLY),
        ("abs.gfn", 0, FormulaStatus.CONTINUOUS),
    ],
)
def test_formulae_continuity(name, x, status):
    assert formulae_continuity_at(fn(name), x).status is status


def test_removable_gap_values():
    check = formulae_continuity_at(fn("removable_gap.gfn"), 1)
    assert check.f1 == check.f2 == check.f3 == G**3 + 2


def test_jump_values():
    check = formulae_continuity_at(fn("jump_at_grossone.gfn"), G)
    assert check.f1 == check.f3 == G**-1 and check.f2 == G**-2


def test_right_only_status():
    f = parse_function("piece x<0: x + 1; at 0: 0; x>0: x")
    assert formulae_continuity_at(f, 0).status is FormulaStatus.RIGHT_ONLY


def test_middle_formula_must_be_defined():
    f = parse_function("piece x<0: x; at 0: 1/x; x>0: x")
    with pytest.raises(FormulaError) as info:
        formulae_continuity_at(f, 0)
    assert "f2" in str(info.value)


# -- derivative reports ----------------------------------------------------------


@pytest.mark.parametrize(
    "f, x, value",
    [
        ("x^2", G, 2 * G),
        ("x^2", G**-1, 2 * G**-1),
        ("x^2", 5, 10),
        ("G^-1*x^2", 1, 2 * G**-1),
        ("G*x^2", 1, 2 * G),
    ],
)
def test_unique_derivatives(f, x, value):
    rep = derivative_report(E(f), x)
    assert rep.kind is DerivKind.UNIQUE and rep.value == value and rep.same_form


def test_derivative_formulas_of_scaled_squares():
    assert format_expr(derivative_report(E("G^-1*x^2"), 1).derivative) == "2G^-1*x"
    assert format_expr(derivative_report(E("G*x^2"), 1).derivative) == "2G*x"


@pytest.mark.parametrize(
    "name, lo, hi",
    [
        ("abs.gfn", -1, 1),
        ("hat.gfn", -2 * G, 0),
        ("tilde.gfn", N("-4G^-1.6"), N("5G^-28")),
    ],
)
def test_derivative_intervals(name, lo, hi):
    rep = derivative_report(fn(name), 0)
    assert rep.kind is DerivKind.INTERVAL
    assert rep.lo == lo and rep.hi == hi
    assert compare(rep.lo, rep.hi) < 0
    assert {rep.lo, rep.hi} == {rep.left, rep.right}


@pytest.mark.parametrize("x, value", [(-3, -1), (2, 1), (G**-1, 1), (-G, -1)])
def test_abs_away_from_the_kink(x, value):
    rep = derivative_report(fn("abs.gfn"), x)
    assert rep.kind is DerivKind.UNIQUE and rep.value == value


def test_values_agree_without_a_common_form():
    rep = derivative_report(parse_function("piece x<1: x^2; at 1: 1; x>1: 2*x - 1"), 1)
    assert rep.kind is DerivKind.UNIQUE and rep.value == 2 and not rep.same_form
    assert rep.derivative is None


def test_discontinuous_formulae_have_no_derivative():
    for name, x in (("removable_gap_shifted.gfn", 1), ("jump_at_grossone.gfn", G), ("max14x.gfn", 0)):
        with pytest.raises(FormulaeDiscontinuous):
            derivative_report(fn(name), x)


def test_removable_gap_derivative():
    rep = derivative_report(fn("removable_gap.gfn"), 1)
    assert rep.kind is DerivKind.UNIQUE and rep.value == 1


def test_relaxed_mode_ignores_the_middle_formula():
    f = parse_function("piece x<0: x; at 0: 1; x>0: 2*x")
    with pytest.raises(FormulaeDiscontinuous):
        derivative_report(f, 0)
    rep = derivative_report(f, 0, relaxed=True)
    assert (rep.lo, rep.hi) == (1, 2)
    with pytest.raises(FormulaeDiscontinuous):
        derivative_report(parse_function("piece x<0: x + 1; at 0: 1; x>0: x"), 0, relaxed=True)


def test_cancelled_forms_are_used_at_the_point():
    rep = derivative_report(parse_function("piece x<0: x^2/x; at 0: 0; x>0: (x^3 + 2*x^2)/x"), 0)
    assert (rep.lo, rep.hi) == (1, 2)
    assert derivative_report(E("1/x"), 2).value == Fraction(-1, 4)
    with pytest.raises(FormulaError):
        derivative_report(E("1/x"), 0)


# -- numerical interval and infinitesimal step ---------------------------------


def test_numerical_interval():
    g = Grid(0, 2, G**-1)
    assert numerical_deriv_interval(E("x^2"), g, 1) == (2 - G**-1, 2 + G**-1)
    x = N("1/2 + 3G^-1")
    assert numerical_deriv_interval(E("x^2"), g, x) == (2 * x - G**-1, 2 * x + G**-1)
    assert numerical_deriv_interval(E("3*x"), g, G**-1) == (3, 3)
    with pytest.raises(OffGrid):
        numerical_deriv_interval(E("x^2"), g, 0)


def test_numerical_interval_with_piecewise_function():
    lo, hi = numerical_deriv_interval(fn("abs.gfn"), Grid(-1, 1, G**-1), 0)
    assert (lo, hi) == (-1, 1)


@pytest.mark.parametrize(
    "f, x, value",
    [
        ("x^2", 3, 6),
        ("x^2", G**-1, 2 * G**-1),
        ("1 + x + x^2 + x^3 + x^4 + x^5", 2, 129),
        ("G*x^3 - x", G, 3 * G**3 - 1),
        ("5", 7, 0),
    ],
)
def test_derivative_via_infinitesimal(f, x, value):
    assert derivative_via_infinitesimal(E(f), x) == value


def test_infinitesimal_step_needs_a_polynomial():
    with pytest.raises(NotPolynomial):
        derivative_via_infinitesimal(E("1/x"), 2)
    with pytest.raises(NotPolynomial):
        derivative_via_infinitesimal(E("x^2"), N("G^{G^-1}"))
