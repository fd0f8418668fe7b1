"""Ball arithmetic: containment is the contract.

Every operation must return a ball containing the true value; the
properties here feed random rationals through and compare against
Fraction arithmetic, and the transcendental functions are pinned to
classical identities and externally known digits.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uod import bigreal
from uod.bigreal import (
    BigReal,
    add,
    div,
    exp,
    from_fraction,
    from_int,
    gamma,
    inv,
    log,
    mul,
    pi,
    pow_rational,
    sin_pi_fraction,
    sqrt,
    sub,
    to_decimal_string,
)

# First 40 decimals of pi, as printed in any table of constants.
PI_40 = Fraction(31415926535897932384626433832795028841972, 10**40)

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=999)
positive = st.fractions(min_value=Fraction(1, 997), max_value=1000, max_denominator=999)
precisions = st.sampled_from([64, 128, 256])


@given(fractions, fractions, precisions)
def test_field_ops_contain_exact_value(x, y, prec):
    bx, by = from_fraction(x, prec), from_fraction(y, prec)
    assert add(bx, by, prec).contains(x + y)
    assert sub(bx, by, prec).contains(x - y)
    assert mul(bx, by, prec).contains(x * y)
    if y:
        assert div(bx, by, prec).contains(x / y)


@given(positive, precisions)
def test_sqrt_contains_and_squares_back(x, prec):
    root = sqrt(from_fraction(x, prec), prec)
    assert mul(root, root, prec).contains(x)


@given(fractions)
def test_refinement_shrinks_radius(x):
    coarse = sin_pi_fraction(x, 64)
    fine = sin_pi_fraction(x, 256)
    assert fine.radius() <= coarse.radius()
    # both balls must overlap, since both contain sin(pi x)
    gap = sub(coarse, fine, 300)
    assert gap.contains_zero()


def test_pi_digits():
    # PI_40 is a rounded decimal, so assert the ball certifies exactly
    # those 40 digits rather than containment of the rounded value
    ball = pi(140)
    assert abs(ball.midpoint() - PI_40) + ball.radius() < Fraction(1, 2 * 10**40)


def test_sine_special_values():
    assert sin_pi_fraction(Fraction(1, 2), 128).contains(1)
    assert sin_pi_fraction(Fraction(1), 128).contains(0)
    assert sin_pi_fraction(Fraction(-1, 2), 128).contains(-1)
    # sin(pi/6) = 1/2 lands exactly
    assert sin_pi_fraction(Fraction(1, 6), 128).contains(Fraction(1, 2))


def test_twice_sine_of_third_squares_to_three():
    s = sin_pi_fraction(Fraction(1, 3), 192)
    doubled = bigreal.mul_int(s, 2, 192)
    assert mul(doubled, doubled, 192).contains(3)


def test_exp_log_round_trip():
    for v in (Fraction(1, 3), Fraction(7, 2), Fraction(1, 97)):
        prec = 160
        ball = log(exp(from_fraction(v, prec), prec), prec)
        assert ball.contains(v)
        assert ball.radius() < Fraction(1, 2**100)


def test_exp_of_one_matches_known_digits():
    # e truncated to 30 places, from the same table of constants as PI_40
    e30 = Fraction(2718281828459045235360287471352, 10**30)
    ball = exp(from_int(1), 128)
    assert abs(ball.midpoint() - e30) + ball.radius() < Fraction(1, 10**30)


def test_log_needs_positive_input():
    with pytest.raises(ValueError):
        log(from_int(0), 64)
    with pytest.raises(ValueError):
        log(from_int(-3), 64)


@given(st.integers(1, 40), st.integers(1, 6))
def test_integer_powers_are_exactish(n, k):
    ball = pow_rational(from_int(n), k, 128)
    assert ball.contains(n**k)


@given(positive, st.integers(2, 5))
def test_rational_power_inverts(x, k):
    prec = 192
    ball = pow_rational(from_fraction(x, prec), Fraction(1, k), prec)
    acc = from_int(1)
    for _ in range(k):
        acc = mul(acc, ball, prec)
    assert acc.contains(x)


def test_gamma_half_squares_to_pi():
    g = gamma(Fraction(1, 2), 256)
    diff = sub(mul(g, g, 256), pi(256), 256)
    assert diff.contains_zero()
    assert diff.radius() < Fraction(1, 2**200)


@given(st.fractions(min_value=Fraction(1, 64), max_value=8, max_denominator=64))
def test_gamma_recurrence(a):
    prec = 160
    lhs = gamma(a + 1, prec)
    rhs = mul(from_fraction(a, prec), gamma(a, prec), prec)
    assert sub(lhs, rhs, prec).contains_zero()


def test_gamma_reflection_at_quarter():
    # Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt(2)
    prec = 256
    lhs = mul(gamma(Fraction(1, 4), prec), gamma(Fraction(3, 4), prec), prec)
    rhs = mul(pi(prec), sqrt(from_int(2), prec), prec)
    diff = sub(lhs, rhs, prec)
    assert diff.contains_zero() and diff.radius() < Fraction(1, 2**180)


def test_inv_widens_honestly():
    wide = BigReal(1 << 64, -64, 1 << 32)  # 1 +- 2^-32
    ball = inv(wide, 128)
    assert ball.contains(1)
    assert ball.contains(Fraction(1, 1) + Fraction(1, 2**33))


def test_decimal_rendering_is_certified():
    assert to_decimal_string(from_int(2)) == "2." + "0" * 50
    ball = BigReal(1 << 20, -20, 1 << 10)  # 1 +- 2^-10: three safe digits
    text = to_decimal_string(ball)
    assert text.startswith("1.00")
    assert len(text.split(".")[1]) <= 3
