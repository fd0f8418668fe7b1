"""Packed presentations cross-checked against the dense ring.

The packed route decides equality of products of (1 - zeta^j) without
expanding them; every law here is verified a second time through
to_cyclonum, so a defect in either representation would show up as a
disagreement.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uod.cyclotomic import from_rational, galois_act_cyclo, sign_of_real
from uod.cycloprod import (
    CycloProduct,
    cofactor_poly,
    sin_presentation,
    sin_twist,
    xi_presentation,
)
from uod.distribution import FormalSum, galois_act, single, y_op
from uod.torus import ZERO, make_point

levels = st.sampled_from([12, 20, 36, 60])


@st.composite
def presentations(draw, level=None):
    N = draw(levels) if level is None else level
    n_factors = draw(st.integers(0, 4))
    factors = {}
    for _ in range(n_factors):
        j = draw(st.integers(1, N - 1))
        factors[j] = factors.get(j, 0) + draw(st.integers(-3, 3))
    zexp = draw(st.integers(0, 2 * N - 1))
    return CycloProduct(N, zexp, factors)


@st.composite
def presentation_pairs(draw):
    N = draw(levels)
    return draw(presentations(N)), draw(presentations(N))


def test_cofactor_times_minimal_polynomial():
    # (x^12 - 1) = Phi_12 * cofactor
    from uod.cyclotomic import cyclotomic_poly

    phi = cyclotomic_poly(12)
    cof = cofactor_poly(12)
    prod = [0] * (len(phi) + len(cof) - 1)
    for i, a in enumerate(phi):
        for j, b in enumerate(cof):
            prod[i + j] += a * b
    expected = [-1] + [0] * 11 + [1]
    assert prod == expected


def test_zero_index_rejected():
    with pytest.raises(ValueError):
        CycloProduct(12, 0, {0: 1})


@settings(max_examples=60, deadline=None)
@given(presentation_pairs())
def test_packed_equality_matches_dense(pair):
    a, b = pair
    packed = a.equals(b)
    dense = a.to_cyclonum() == b.to_cyclonum()
    assert packed == dense


@settings(max_examples=40, deadline=None)
@given(presentations())
def test_galois_commutes_with_densify(p):
    t = 7 if p.level % 7 else 11
    assert p.galois(t).to_cyclonum() == galois_act_cyclo(t, p.to_cyclonum())


@settings(max_examples=40, deadline=None)
@given(presentation_pairs())
def test_mul_commutes_with_densify(pair):
    a, b = pair
    assert a.mul(b).to_cyclonum() == a.to_cyclonum() * b.to_cyclonum()


@given(presentations())
def test_conj_then_conj(p):
    assert p.conj().conj().equals(p)


def test_argument_is_exact():
    # 1 - zeta_12 has argument pi (1/12 - 1/2) = -5 pi/12, i.e. 19/12 mod 2
    p = CycloProduct(12, 0, {1: 1})
    assert p.arg_over_pi() == Fraction(19, 12)
    assert not p.is_real()
    # conjugate-symmetric product is real and positive
    q = p.mul(p.conj())
    assert q.arg_over_pi() == 0
    assert q.sign_real() == 1


def test_sign_real_negative_case():
    # zeta^(N/2) = -1 times a positive real product
    p = CycloProduct(12, 0, {1: 1, 11: 1}).scale_zeta(6)
    assert p.sign_real() == -1
    with pytest.raises(ValueError):
        CycloProduct(12, 1, {}).sign_real()


def test_is_one_fast_and_slow_paths():
    assert CycloProduct.one(20).is_one()
    assert not CycloProduct(20, 1, {}).is_one()
    # (1 - zeta)(1 - zeta^-1) = 2 - zeta - zeta^-1, not 1
    assert not CycloProduct(20, 0, {1: 1, 19: 1}).is_one()
    # telescoping: prod over 4th roots (1 - i^k zeta) = 1 - zeta^4 at level 20
    lhs = CycloProduct(20, 0, {1: 1, 6: 1, 11: 1, 16: 1, 4: -1})
    assert lhs.is_one()


def test_xi_presentation_matches_dense_xi():
    from uod.cyclotomic import xi_exact

    s = FormalSum([(make_point(1, 5), 2), (make_point(3, 20), -1), (ZERO, 3)])
    assert xi_presentation(s, 20).to_cyclonum() == xi_exact(s, 20)


def test_xi_presentation_kills_distribution_relation():
    assert xi_presentation(y_op(3, single(make_point(1, 5))), 60).is_one()


def test_sin_twist_of_zero_point_vanishes():
    assert sin_twist(single(ZERO), 8) == 0


def test_sin_presentation_squares_to_three():
    s = 2 * single(make_point(1, 3))
    p = sin_presentation(s, 12)
    assert p.to_cyclonum() == from_rational(12, 3)


def test_sin_presentation_is_reflection_invariant():
    """sin is even around zero in the normalized sense: sin(-a) = sin(a)."""
    for num, den in [(1, 5), (2, 7), (3, 11)]:
        s = single(make_point(num, den))
        n = single(make_point(-num, den))
        N = 4 * den
        assert sin_presentation(s, N).equals(sin_presentation(n, N))


def test_sin_presentation_positive():
    s = FormalSum([(make_point(1, 7), 3), (make_point(2, 7), -2)])
    p = sin_presentation(s, 28)
    assert p.sign_real() == 1
    assert sign_of_real(p.to_cyclonum()) == 1
