from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gross.core import G, ONE, ZERO, GrossNumber
from gross.errors import BadRadix, IncomparableExpSum, MixedBase, NonPositiveCount, UnsupportedRatio
from gross.numeral import parse_number
from gross.series import (
    ExpSum,
    ExpTerm,
    PointSet,
    arithmetic_sum,
    compare_same_base,
    count_points,
    geometric_sum,
    repeated_sum,
    repeating_digits,
)
from strategies import flat_numbers, rationals

N = parse_number
AUX = settings(max_examples=300, deadline=None)


@pytest.mark.parametrize(
    "a1, d, n, expected",
    [
        (1, 1, G, "0.5G^2 + 0.5G"),
        (G**-1, G**-1, G, "0.5G + 0.5"),
        (5, 0, 3, "15"),
        (1, 2, G, "G^2"),
    ],
)
def test_arithmetic_sum(a1, d, n, expected):
    assert str(arithmetic_sum(a1, d, n)) == expected


@pytest.mark.parametrize(
    "item, count, expected",
    [
        (7, 5 * G, 35 * G),
        (3, G, 3 * G),
        (7, 3 * G, 21 * G),
        (3, 7 * G + 2, 21 * G + 6),
        (2 * G, Fraction(1, 2) * G, G**2),
        (4 * G**-1, Fraction(1, 2) * G, GrossNumber([(2, 0)])),
    ],
)
def test_repeated_sum(item, count, expected):
    assert repeated_sum(item, count) == expected


def test_repeated_sums_difference_is_negative():
    assert repeated_sum(3, G) - repeated_sum(7, 5 * G) == -32 * G
    assert repeated_sum(3, 7 * G + 2) - repeated_sum(7, 3 * G) == 6


@pytest.mark.parametrize("count", [0, -G, Fraction(1, 2), G + Fraction(1, 2), -3])
def test_counts_must_be_positive_integers(count):
    with pytest.raises(NonPositiveCount):
        repeated_sum(1, count)
    with pytest.raises(NonPositiveCount):
        arithmetic_sum(1, 1, count)


def test_counts_above_grossone_are_accepted():
    assert repeated_sum(1, 2 * G) == 2 * G


@pytest.mark.parametrize(
    "q, n, i0, expected",
    [
        (3, G**2, 0, "0.5*3^(G^2 + 1) + -0.5"),
        (Fraction(1, 2), G, 1, "1 + -1*2^(-G)"),
        (1, G, 0, "G + 1"),
        (2, 3, 0, "15"),
        (Fraction(1, 2), 3, 1, "0.875"),
        (-1, 5, 0, "0"),
        (N("G^-1"), 3, 0, "1 + G^-1 + G^-2 + G^-3"),
        (N("-G"), 3, 0, "-G^3 + G^2 - G + 1"),
    ],
)
def test_geometric_sum(q, n, i0, expected):
    assert str(geometric_sum(q, n, i0)) == expected


def test_geometric_sum_structure():
    s = geometric_sum(3, G**2)
    assert s.terms() == [ExpTerm(N("0.5"), Fraction(3), G**2 + 1)]
    assert s.tail == Fraction(-1, 2)
    assert not s.is_gross() and s.bases == {Fraction(3)}
    assert geometric_sum(2, 3).is_gross()


def test_geometric_sum_rejects_unsupported_ratios():
    with pytest.raises(UnsupportedRatio):
        geometric_sum(G + 1, 3)
    with pytest.raises(NonPositiveCount):
        geometric_sum(Fraction(1, 2), 0)


def test_newly_added_item():
    assert str(geometric_sum(3, G**2 + 1) - geometric_sum(3, G**2)) == "1*3^(G^2 + 1)"


def test_self_difference_is_zero():
    a = geometric_sum(3, G**2)
    assert (a - a).is_zero()
    assert (a - a) == ExpSum.of(ZERO)


def test_repeating_nines_subtraction():
    nines = repeating_digits(2, 9, G)
    assert str(nines) == "3 + -1*10^(-G)"
    assert str(ExpSum.of(3) - nines) == "1*10^(-G)"
    assert str(repeating_digits(0, 1, 3, radix=2)) == "0.875"


def test_expsum_scale_and_single_term_product():
    a = ExpSum.power(3, G)
    assert a.scale(2) == ExpSum.power(3, G, 2)
    assert str(a.mul_term(ExpTerm(ONE, Fraction(3), ONE))) == "1*3^(G + 1)"
    assert str(a * 2) == "2*3^(G)"
    assert str(ExpSum.power(Fraction(1, 3), G)) == "1*3^(-G)"


def test_compare_same_base():
    assert compare_same_base(geometric_sum(3, G**2), geometric_sum(3, G**2 + 1)) < 0
    assert compare_same_base(ExpSum.of(G**5), ExpSum.power(2, G)) < 0
    assert compare_same_base(ExpSum.power(2, G, 3), ExpSum.power(2, G, 2)) > 0
    assert compare_same_base(ExpSum.of(3), ExpSum.of(2)) > 0
    a = geometric_sum(2, G)
    assert compare_same_base(a, a) == 0


def test_compare_across_bases_fails():
    with pytest.raises(MixedBase):
        compare_same_base(ExpSum.power(2, G), ExpSum.power(3, G))


def test_negative_infinite_exponent_is_outweighed_by_a_tail():
    assert compare_same_base(ExpSum.power(2, -G), ExpSum.of(G**-5)) < 0
    assert compare_same_base(ExpSum.power(2, -G), ExpSum.of(ZERO)) > 0


def test_compare_against_infinite_grosspower_tail_fails():
    with pytest.raises(IncomparableExpSum):
        compare_same_base(ExpSum.power(2, G), ExpSum.of(N("G^{G}")))


@pytest.mark.parametrize(
    "kind, radix, expected",
    [
        ("unit_interval_grossone", None, "G"),
        ("ray_grossone", None, "G^2"),
        ("line_grossone", None, "2G^2"),
        ("line_grossone_closed", None, "2G^2 + 1"),
        ("unit_interval_positional", 10, "1*10^(G)"),
        ("line_positional_units", 10, "2G*10^(G)"),
        ("reals_positional", 2, "1*2^(2G)"),
    ],
)
def test_count_points(kind, radix, expected):
    assert str(count_points(kind, radix)) == expected


def test_count_points_radix_rules():
    with pytest.raises(BadRadix):
        count_points(PointSet("reals_positional"), 1)
    with pytest.raises(BadRadix):
        count_points("unit_interval_positional")


def test_closed_line_count():
    assert count_points("line_grossone_closed") == count_points("ray_grossone").scale(2) + ExpSum.of(ONE)


# -- properties ----------------------------------------------------------------


counts = st.one_of(
    st.integers(1, 12).map(lambda k: GrossNumber([(k, 0)])),
    st.sampled_from(["G", "G^2", "2G", "0.5G", "G + 3", "3G^2 - G"]).map(parse_number),
)
ratios = st.one_of(
    rationals.filter(lambda q: q not in (0, 1)),
    st.sampled_from(["G", "G^-1", "-G", "-2G^-1"]).map(parse_number),
)


@AUX
@given(ratios, counts, st.integers(0, 3))
def test_telescoping(q, n, i0):
    gross_q = isinstance(q, GrossNumber)
    assume(not (gross_q and not n.is_rational()))
    assume(not (isinstance(q, Fraction) and q < 0 and not n.is_rational()))
    assume(compare_count(n, i0))
    step = geometric_sum(q, n + 1, i0) - geometric_sum(q, n, i0)
    if gross_q:
        expected = ExpSum.of(q ** int(n.to_fraction() + 1))
    else:
        expected = ExpSum.power(q, n + 1) if q > 0 else ExpSum.of(q ** int(n.to_fraction() + 1))
    assert step == expected


def compare_count(n: GrossNumber, i0: int) -> bool:
    return not n.is_rational() or n.to_fraction() >= i0


@AUX
@given(flat_numbers(3), counts, counts)
def test_repeated_sum_is_additive_in_the_count(item, m, n):
    assert repeated_sum(item, m + n) == repeated_sum(item, m) + repeated_sum(item, n)
