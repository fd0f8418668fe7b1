"""Formal-sum algebra, the operator calculus, and selectors."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uod.distribution import (
    FormalSum,
    canonical_selector,
    deg,
    format_formal_sum,
    galois_act,
    in_A_doubleprime,
    in_A_prime,
    lift,
    p_projector,
    parse_formal_sum,
    seeded_selector,
    single,
    specialized_selector,
    theta_op,
    y_op,
    zero,
)
from uod.torus import ZERO, make_point

# Points with odd denominator > 2, avoiding (1/2)Z, for selector laws.
odd_points = st.builds(
    make_point, st.integers(1, 400), st.sampled_from([3, 5, 7, 9, 15, 21, 45])
).filter(lambda a: a.den > 2)

sums = st.lists(
    st.tuples(odd_points, st.integers(-5, 5)), max_size=8
).map(FormalSum)


def test_sum_normalizes_and_compares():
    a, b = make_point(1, 3), make_point(2, 3)
    s = FormalSum([(a, 2), (b, 1), (a, -2)])
    assert s == FormalSum([(b, 1)])
    assert s.coefficient(a) == 0 and s.coefficient(b) == 1
    assert len(s) == 1 and bool(s)
    assert not zero()


@given(sums, sums)
def test_addition_forms_a_group(s, t):
    assert s + t == t + s
    assert s + zero() == s
    assert s - s == zero()
    assert -(-s) == s


@given(sums, st.integers(-4, 4))
def test_scalar_action(s, k):
    expected = zero()
    for _ in range(abs(k)):
        expected = expected + s
    if k < 0:
        expected = -expected
    assert k * s == expected
    assert deg(k * s) == k * deg(s)


def test_y_operator_display():
    assert format_formal_sum(y_op(2, single(ZERO))) == "-[1/2]"
    # Y_3 [1/2] = [1/2] - ([1/6] + [1/2] + [5/6]); larger point prints first
    assert format_formal_sum(y_op(3, single(make_point(1, 2)))) == "-[5/6] - [1/6]"


@given(sums, st.integers(2, 7))
def test_y_operator_is_linear(s, p):
    t = single(make_point(1, 3))
    assert y_op(p, s + t) == y_op(p, s) + y_op(p, t)


@given(sums)
def test_galois_action_is_multiplicative(s):
    # 2 and 4 are units mod every odd denominator used here
    assert galois_act(2, galois_act(2, s)) == galois_act(4, s)
    assert galois_act(1, s) == s


def test_galois_action_rejects_non_units():
    with pytest.raises(ValueError):
        galois_act(3, single(make_point(1, 3)))


def test_theta_operator_smallest_case():
    # for p = 3 the sum sigma^0 + ... + sigma^{(p-3)/2} is a single term
    s = single(make_point(1, 5))
    assert theta_op(3, 2, s) == s
    with pytest.raises(ValueError):
        theta_op(4, 3, s)


def test_projector_splits_two_adic_units():
    s = FormalSum([(make_point(1, 3), 2), (make_point(2, 3), 5), (make_point(1, 9), 1)])
    kept = p_projector(s)
    assert kept == FormalSum([(make_point(1, 3), 2), (make_point(1, 9), 1)])


@given(sums)
def test_projector_is_idempotent(s):
    assert p_projector(p_projector(s)) == p_projector(s)


@pytest.mark.parametrize(
    "H",
    [canonical_selector(), seeded_selector(0), seeded_selector(17), specialized_selector(3, 5, 2, 2)],
)
@given(s=sums)
def test_selector_laws(H, s):
    """H is idempotent and complementary to its sigma_-1 conjugate."""
    lifted = lift(H, s)
    assert lift(H, lifted) == lifted
    conj = galois_act(-1, lift(H, galois_act(-1, s)))
    assert lifted + conj == s


def test_selector_rejects_half_integers():
    H = canonical_selector()
    with pytest.raises(ValueError):
        lift(H, single(make_point(1, 2)))
    with pytest.raises(ValueError):
        H.chooses(ZERO)


def test_membership_predicates():
    assert in_A_prime(single(make_point(1, 4)))
    assert not in_A_prime(single(make_point(1, 2)))
    assert in_A_doubleprime(single(make_point(1, 3)))
    assert not in_A_doubleprime(single(make_point(1, 6)))
    assert not in_A_doubleprime(single(ZERO))


@given(sums)
def test_format_parse_round_trip(s):
    assert parse_formal_sum(format_formal_sum(s)) == s


def test_parse_grammar_corners():
    assert parse_formal_sum("[1/3] + 2*[1/5] - 3 * [ 2 / 7 ]") == FormalSum(
        [(make_point(1, 3), 1), (make_point(1, 5), 2), (make_point(2, 7), -3)]
    )
    assert parse_formal_sum("0") == zero()
    with pytest.raises(ValueError):
        parse_formal_sum("[1/3] + garbage")
    with pytest.raises(ValueError):
        parse_formal_sum("")
