"""Additive valuations of sine monomials, read off combinatorially.

With the normalization v_r(1 - e(1/r)) = 1, a symbol [a] whose exact
denominator is r^k contributes weight 1/r^(k-1), and every other symbol
is a unit above r.  No ideal factorization happens here; the weight rule
itself is pinned by an exact unit oracle in the cyclotomic tests.
"""
from __future__ import annotations

from fractions import Fraction

from .das import canonical_apq
from .distribution import FormalSum
from .galois import legendre


def v_at(r: int, s: FormalSum) -> Fraction:
    """v_r of the monomial xi(s) (equivalently sin s; they differ by a
    root of unity, which every valuation kills)."""
    total = Fraction(0)
    for a, c in s.items():
        m = a.den
        if m == 1:
            continue
        k = 0
        while m % r == 0:
            m //= r
            k += 1
        if m == 1:
            total += c * Fraction(1, r ** (k - 1))
    return total


def seo_check(p: int, q: int) -> bool:
    """(-1)^(v_q sin a_pq) = (p/q) and (-1)^(v_p sin a_pq) = (q/p)."""
    if p == 2 or q <= p:
        raise ValueError("the identity is stated for odd primes p < q")
    a = canonical_apq(p, q)
    vq = v_at(q, a)
    vp = v_at(p, a)
    if vq.denominator != 1 or vp.denominator != 1:
        raise ArithmeticError("valuation of a Das representative is integral")
    return ((-1) ** int(vq) == legendre(p, q)
            and (-1) ** int(vp) == legendre(q, p))
