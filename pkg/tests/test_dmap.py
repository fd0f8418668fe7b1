"""Wedge invariants of square classes, small instances.

The full prime sweeps live in the acceptance suite; here the shapes,
validation, and the cross-oracle agreements are pinned on the smallest
cases.
"""

import pytest

from uod.cycloprod import CycloProduct
from uod.dmap import (
    VFamily,
    WedgeClass,
    alpha,
    alpha_odd_combinatorial,
    d_of_sin_apq,
    d_of_sqrt_prime,
)


def wedge(*pairs):
    return WedgeClass(frozenset(pairs))


def test_wedge_class_ordering_and_display():
    w = wedge((-1, 2), (3, 5))
    assert str(w) == "e_-1 ^ e_2 + e_3 ^ e_5"
    assert w.as_pairs() == [[-1, 2], [3, 5]]
    assert str(wedge()) == "0"


def test_wedge_class_validation():
    with pytest.raises(ValueError):
        wedge((5, 3))
    with pytest.raises(ValueError):
        wedge((2, -1))
    with pytest.raises(ValueError):
        wedge((3, 15))
    with pytest.raises(ValueError):
        wedge((3, 3))


def test_vfamily_must_be_total():
    with pytest.raises(ValueError):
        VFamily(12, {1: CycloProduct.one(12)})


def test_alpha_of_constant_family_is_trivial():
    fam = VFamily(12, {t: CycloProduct.one(12) for t in (1, 5, 7, 11)})
    for r, s in [(-1, 2), (-1, 3), (2, 3)]:
        assert alpha(fam, r, s) == 1


def test_sqrt_family_and_trivial_alphas():
    # level 20: sigma_3 does not touch sqrt(-1) or sqrt(2), and both of
    # those alphas must come out +1, leaving only the (-1, 5) pair
    assert d_of_sqrt_prime(5) == wedge((-1, 5))


def test_sqrt_wedges_smallest():
    assert d_of_sqrt_prime(2) == wedge((-1, 2))
    assert d_of_sqrt_prime(3) == wedge((-1, 3))
    assert d_of_sqrt_prime(13) == wedge((-1, 13))


def test_sqrt_rejects_composites():
    with pytest.raises(ValueError):
        d_of_sqrt_prime(15)


def test_sin_wedges_smallest():
    assert d_of_sin_apq(2, 3) == wedge((2, 3))
    assert d_of_sin_apq(3, 5) == wedge((3, 5))


def test_sin_wedge_rejects_bad_pairs():
    with pytest.raises(ValueError):
        d_of_sin_apq(3, 3)
    with pytest.raises(ValueError):
        d_of_sin_apq(5, 3)
    with pytest.raises(ValueError):
        d_of_sin_apq(4, 7)


def test_policy_choice_is_invisible():
    assert d_of_sin_apq(3, 5, policy="second") == d_of_sin_apq(3, 5)


def test_combinatorial_alpha_matches_certified():
    for p, q in [(3, 5), (3, 7), (5, 7)]:
        comb = alpha_odd_combinatorial(p, q)
        w = d_of_sin_apq(p, q)
        certified = -1 if (p, q) in w.pairs else 1
        assert comb == certified == -1


def test_combinatorial_alpha_rejects_even_p():
    with pytest.raises(ValueError):
        alpha_odd_combinatorial(2, 5)
