"""Randomized laws for gross-number arithmetic (1000 cases each)."""

from fractions import Fraction

from hypothesis import given, settings

from gross.core import ONE, ZERO, GrossNumber, _lift, classify, compare, div, normalize, split
from gross.numeral import format_number, parse_number
from strategies import digit_lists, gross_numbers, raw_terms

CASES = settings(max_examples=1000, deadline=None)


@CASES
@given(gross_numbers(), gross_numbers(), gross_numbers())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert ONE * a == a
    assert ZERO * a == ZERO


@CASES
@given(raw_terms(8))
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize(once.terms) == once
    assert all(d != 0 for d, _ in once.terms)
    powers = [_lift(p) for _, p in once.terms]
    assert all(compare(p, q) > 0 for p, q in zip(powers, powers[1:]))


@CASES
@given(gross_numbers(), gross_numbers(), gross_numbers())
def test_order_total_and_compatible(a, b, c):
    outcomes = [a < b, a == b, a > b]
    assert outcomes.count(True) == 1
    if a < b:
        assert a + c < b + c
        if c > 0:
            assert a * c < b * c


@CASES
@given(gross_numbers(3), gross_numbers(3).filter(lambda v: not v.is_zero()))
def test_exact_division_round_trip(a, b):
    q, exact = div(a * b, b, max_terms=16)
    assert exact and q == a
    q, exact = div(a, b, max_terms=6)
    if exact:
        assert q * b == a
    else:
        rem = a - q * b
        assert not rem.is_zero()
        last = _lift(q.terms[-1].power)
        lead_b = _lift(b.leading_power)
        # the next quotient term would be strictly smaller than the last one
        assert compare(_lift(rem.leading_power) - lead_b, last) < 0
        if compare(lead_b, ZERO) <= 0:
            assert compare(_lift(rem.leading_power), last) < 0


@CASES
@given(digit_lists(), digit_lists())
def test_finite_part_homomorphism(xs, ys):
    # oracle: plain rationals summed straight from the digit lists
    ra, rb = sum(xs, Fraction(0)), sum(ys, Fraction(0))
    a = normalize([(d, 0) for d in xs])
    b = normalize([(d, 0) for d in ys])
    assert (a + b).finite_part() == ra + rb
    assert (a * b).finite_part() == ra * rb
    assert (a - b).finite_part() == ra - rb
    assert compare(a, b) == (ra > rb) - (ra < rb)
    assert (a + b).is_rational() and a.to_fraction() == ra


@CASES
@given(gross_numbers(6))
def test_split_and_format_round_trip(a):
    inf, fin, small = split(a)
    assert inf + fin + small == a
    assert parse_number(format_number(a)) == a
    assert format_number(parse_number(format_number(a))) == format_number(a)
    if not a.is_zero():
        assert classify(a).value in {"infinite", "finite", "infinitesimal"}
