from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uod.torus import (
    HALF,
    ZERO,
    TorusPoint,
    add_points,
    is_half_integer,
    is_two_adic_integer,
    is_two_adic_unit,
    make_point,
    negate_point,
    scale_point,
)

rationals = st.tuples(st.integers(-10**6, 10**6), st.integers(1, 10**4))


def test_canonical_form():
    assert make_point(5, 3) == TorusPoint(2, 3)
    assert make_point(-1, 4) == TorusPoint(3, 4)
    assert make_point(6, 3) == ZERO
    assert make_point(7, 14) == HALF


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        make_point(1, 0)


@given(rationals)
def test_representative_in_unit_interval(nd):
    a = make_point(*nd)
    assert 0 <= a.num < a.den
    assert Fraction(a.num, a.den) == Fraction(*nd) % 1


@given(rationals, st.integers(-100, 100))
def test_scale_matches_fraction_arithmetic(nd, t):
    a = make_point(*nd)
    assert Fraction(*scale_point(t, a)) == (t * Fraction(*nd)) % 1


@given(rationals, rationals)
def test_add_commutes(x, y):
    a, b = make_point(*x), make_point(*y)
    assert add_points(a, b) == add_points(b, a)


@given(rationals)
def test_negate_is_involutive(nd):
    a = make_point(*nd)
    assert negate_point(negate_point(a)) == a
    assert add_points(a, negate_point(a)) == ZERO


def test_two_adic_predicates():
    # a is a 2-adic integer iff its denominator is odd; a unit iff it is
    # moreover nonzero mod every power of 2, i.e. num/den has odd num too.
    assert is_two_adic_integer(make_point(1, 3))
    assert not is_two_adic_integer(make_point(1, 6))
    assert is_two_adic_unit(make_point(1, 3))
    assert not is_two_adic_unit(make_point(2, 3))
    assert not is_two_adic_unit(ZERO)
    assert is_half_integer(HALF) and is_half_integer(ZERO)
    assert not is_half_integer(make_point(1, 4))
