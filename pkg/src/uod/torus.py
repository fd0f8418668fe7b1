"""Exact points of Q/Z, the index set for distribution symbols.

A point is kept in canonical form: num/den with gcd(num, den) = 1 and
0 <= num < den.  The zero point is (0, 1).
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple


class TorusPoint(NamedTuple):
    num: int
    den: int

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ZERO = TorusPoint(0, 1)
HALF = TorusPoint(1, 2)


def make_point(num: int, den: int) -> TorusPoint:
    """Canonical representative of num/den mod Z.

    >>> make_point(5, 3)
    TorusPoint(num=2, den=3)
    >>> make_point(-1, 4)
    TorusPoint(num=3, den=4)
    >>> make_point(2, 4)
    TorusPoint(num=1, den=2)
    """
    if den == 0:
        raise ZeroDivisionError("torus point needs a nonzero denominator")
    if den < 0:
        num, den = -num, -den
    num %= den
    g = gcd(num, den)
    return TorusPoint(num // g, den // g)


def scale_point(t: int, a: TorusPoint) -> TorusPoint:
    """Multiply by the integer t on Q/Z (the action of sigma_t on indices)."""
    return make_point(t * a.num, a.den)


def add_points(a: TorusPoint, b: TorusPoint) -> TorusPoint:
    return make_point(a.num * b.den + b.num * a.den, a.den * b.den)


def negate_point(a: TorusPoint) -> TorusPoint:
    return make_point(-a.num, a.den)


def is_two_adic_integer(a: TorusPoint) -> bool:
    """True iff a has no 2 in its denominator."""
    return a.den % 2 == 1


def is_two_adic_unit(a: TorusPoint) -> bool:
    """True iff a is a 2-adic integer with odd numerator (valuation zero).

    The zero point has numerator 0, so it is an integer but not a unit.
    """
    return a.den % 2 == 1 and a.num % 2 == 1


def is_half_integer(a: TorusPoint) -> bool:
    """True iff a lies in (1/2)Z, i.e. denominator 1 or 2."""
    return a.den <= 2
