"""Numeric sine and gamma monomials, and the combinatorial sign rule.

sin_eval and gamma_eval turn a formal sum into a certified ball for
prod (2 sin pi a)^c and prod (sqrt(2 pi)/Gamma(a))^c.  The zero symbol
contributes the empty factor 1 in both, by the defining case split.

sign_rule computes sign(sigma_t sin s) for s with odd denominators > 1
purely combinatorially:  (-1)^deg P((1-sigma_t)s) times the action of t
on sqrt(-1) raised to deg s.  The exact cyclotomic machinery provides an
independent oracle for it in the tests.
"""
from __future__ import annotations

from fractions import Fraction

from . import bigreal
from .das import canonical_apq
from .distribution import FormalSum, deg, galois_act, in_A_doubleprime, p_projector


class Inconclusive(RuntimeError):
    """A certified check could neither pass nor fail at the given precision."""


def _monomial(factors: list[tuple[bigreal.BigReal, int]], prec: int) -> bigreal.BigReal:
    """prod base^c for positive bases, one inversion at the end."""
    num = bigreal.from_int(1)
    den = bigreal.from_int(1)
    for base, c in factors:
        powed = bigreal.pow_rational(base, abs(c), prec)
        if c > 0:
            num = bigreal.mul(num, powed, prec)
        elif c < 0:
            den = bigreal.mul(den, powed, prec)
    return bigreal.div(num, den, prec)


def sin_eval(s: FormalSum, prec: int) -> bigreal.BigReal:
    """Ball containing prod (2 sin pi a)^c over the support of s."""
    factors = []
    for a, c in s.items():
        if a.den == 1:
            continue
        base = bigreal.mul_int(bigreal.sin_pi_rational(a, prec), 2, prec)
        factors.append((base, c))
    return _monomial(factors, prec)


def gamma_eval(s: FormalSum, prec: int) -> bigreal.BigReal:
    """Ball containing prod (sqrt(2 pi)/Gamma(a))^c over the support of s."""
    root_two_pi = bigreal.sqrt(bigreal.mul_int(bigreal.pi(prec), 2, prec), prec)
    factors = []
    for a, c in s.items():
        if a.den == 1:
            continue
        base = bigreal.div(root_two_pi, bigreal.gamma(Fraction(a.num, a.den), prec), prec)
        factors.append((base, c))
    return _monomial(factors, prec)


def sign_rule(s: FormalSum, t: int) -> int:
    """sign(sigma_t sin s) for s with all denominators odd and > 1.

    Equals (-1)^deg(P((1 - sigma_t)s)) * eps^deg(s), where P keeps the
    2-adic unit symbols and eps is the sign sigma_t puts on sqrt(-1),
    i.e. +1 iff t = 1 mod 4.
    """
    if not in_A_doubleprime(s):
        raise ValueError("sign rule needs all denominators odd and > 1")
    if t % 2 == 0:
        raise ValueError("t must be odd")
    moved = p_projector(s - galois_act(t, s))
    sign = -1 if deg(moved) % 2 else 1
    if t % 4 != 1 and deg(s) % 2:
        sign = -sign
    return sign


def _factorization_constant(p: int, q: int, prec: int) -> bigreal.BigReal:
    """The closed-form constant p^(e_p) q^(e_q) that Gamma(a_pq)/sqrt(sin a_pq) equals."""
    if p == 2:
        ep = Fraction(-(q - 1), 8)
        eq = Fraction(1, 8)
    else:
        ep = Fraction(-((q - 1) ** 2), 16 * q)
        eq = Fraction((p - 1) ** 2, 16 * p)
    return bigreal.mul(bigreal.pow_rational(bigreal.from_int(p), ep, prec),
                       bigreal.pow_rational(bigreal.from_int(q), eq, prec), prec)


def gamma_sine_factorization_check(p: int, q: int, prec: int,
                                   max_prec: int | None = None) -> bool:
    """Certify |Gamma(a_pq)/sqrt(sin a_pq) - constant| < 2^(-prec/2).

    Returns True on certified pass, False on certified fail.  If the ball
    is too wide to decide, the precision doubles up to max_prec (default
    8 * prec); beyond that, Inconclusive is raised.
    """
    if max_prec is None:
        max_prec = 8 * prec
    tol = Fraction(1, 2 ** (prec // 2))
    a = canonical_apq(p, q)
    work = prec
    while True:
        ratio = bigreal.div(gamma_eval(a, work),
                            bigreal.sqrt(sin_eval(a, work), work), work)
        diff = bigreal.sub(ratio, _factorization_constant(p, q, work), work)
        if diff.max_abs() < tol:
            return True
        low = abs(diff.midpoint()) - diff.radius()
        if low > tol:
            return False
        if work >= max_prec:
            raise Inconclusive(
                f"cannot certify the ({p},{q}) factorization within {max_prec} bits")
        work *= 2
