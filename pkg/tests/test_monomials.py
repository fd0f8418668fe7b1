"""Numeric monomials and the combinatorial sign rule.

The gamma cases lean on two classical identities with known closed
forms (multiplication and reflection), which makes them independent
oracles for the Spouge machinery underneath.
"""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uod import bigreal
from uod.cyclotomic import galois_act_cyclo, sin_exact
from uod.cycloprod import sin_presentation
from uod.distribution import FormalSum, single, y_op, zero
from uod.monomials import (
    Inconclusive,
    gamma_eval,
    gamma_sine_factorization_check,
    sign_rule,
    sin_eval,
)
from uod.torus import ZERO, make_point


def test_sin_eval_half_is_two():
    assert sin_eval(single(make_point(1, 2)), 128).contains(2)


def test_sin_eval_sixth_is_one():
    ball = sin_eval(single(make_point(1, 6)), 128)
    assert ball.contains(1)
    assert ball.radius() < Fraction(1, 2**100)


def test_sin_eval_inverse_factor():
    assert sin_eval(-single(make_point(1, 6)), 128).contains(1)


def test_empty_and_zero_symbols_give_one():
    assert sin_eval(zero(), 64).contains(1)
    assert sin_eval(single(ZERO), 64).contains(1)
    assert gamma_eval(single(ZERO), 64).contains(1)


def test_sin_eval_matches_dense_embedding():
    # sin of 2[1/3] is the rational 3; the dense ring agrees exactly
    s = 2 * single(make_point(1, 3))
    ball = sin_eval(s, 160)
    assert ball.contains(sin_exact(s, 12).to_fraction())


def test_gamma_multiplication_case():
    # the Gamma monomial of Y_3 [1/4] collapses to 3^(1/4)
    s = y_op(3, single(make_point(1, 4)))
    prec = 192
    ball = gamma_eval(s, prec)
    target = bigreal.pow_rational(bigreal.from_int(3), Fraction(1, 4), prec)
    assert bigreal.sub(ball, target, prec).contains_zero()


def test_gamma_reflection_case():
    # [a] + [-a] turns the Gamma monomial into the sine monomial at a
    a = make_point(1, 5)
    s = single(a) + single(make_point(-1, 5))
    prec = 192
    lhs = gamma_eval(s, prec)
    rhs = sin_eval(single(a), prec)
    assert bigreal.sub(lhs, rhs, prec).contains_zero()


def test_sign_rule_smallest_case():
    # sin [1/3] = sqrt 3 lives in Q(zeta_12); sigma_t fixes it only at
    # t = 1, 11 mod 12
    assert sign_rule(single(make_point(1, 3)), 1) == 1
    assert sign_rule(single(make_point(1, 3)), 5) == -1
    assert sign_rule(single(make_point(1, 3)), 7) == -1
    assert sign_rule(single(make_point(1, 3)), 11) == 1
    assert sign_rule(single(make_point(1, 3)), 13) == 1


def test_sign_rule_oracle_smallest_case():
    # sigma_5 (sin [1/3]) = sigma_5 (sqrt 3) = -sqrt 3, seen densely
    v = sin_exact(single(make_point(1, 3)), 12)
    assert galois_act_cyclo(5, v) == -v


def test_sign_rule_domain():
    with pytest.raises(ValueError):
        sign_rule(single(make_point(1, 6)), 5)
    with pytest.raises(ValueError):
        sign_rule(single(make_point(1, 3)), 4)


odd_points = st.builds(
    make_point, st.integers(1, 50), st.sampled_from([3, 5, 9, 15])
).filter(lambda a: a.den > 1)

doubleprime_sums = st.lists(
    st.tuples(odd_points, st.integers(-2, 2)), min_size=1, max_size=4
).map(FormalSum).filter(bool)


@settings(max_examples=80, deadline=None)
@given(doubleprime_sums, st.integers(0, 200))
def test_sign_rule_matches_exact_argument(s, tseed):
    """The rule must agree with the sign read off the exact argument."""
    N = 180  # 4 * lcm of all denominators the strategy can draw
    t = 2 * tseed + 1
    if gcd(t, N) != 1:
        return
    predicted = sign_rule(s, t)
    actual = sin_presentation(s, N).galois(t).sign_real()
    assert predicted == actual


def test_factorization_smallest_pairs():
    assert gamma_sine_factorization_check(3, 5, 128)
    assert gamma_sine_factorization_check(2, 3, 128)


def test_inconclusive_is_a_runtime_error():
    assert issubclass(Inconclusive, RuntimeError)
