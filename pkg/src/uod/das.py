"""Two-prime torsion classes and the identities that certify them.

For primes p < q, the class attached to the pair is represented by

    a = (H Y_p H Y_q - H Y_q H Y_p) x,     x = [0]  (odd p)
                                           x = [0] + [1/2]  (p = 2),

for any lifting operator H.  Three families of exact identities make the
quotient facts checkable without ever materializing the quotient group:
the first identity exhibits 2a as a member of Y_p A + Y_q A + (1+s_-1)A
(torsion witness), the second compares representatives built from two
different lifting operators, and the conjugation family controls
(1 - sigma) a for every Galois element sigma, producing the cochain
c_sigma that the wedge computation feeds on.

All checks here are plain formal-sum algebra; nothing is numeric.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .distribution import (
    FormalSum,
    Selector,
    canonical_selector,
    galois_act,
    in_A_prime,
    lift,
    single,
    y_op,
    zero,
)
from .torus import HALF, ZERO, TorusPoint, make_point


def base_x(p: int) -> FormalSum:
    """The seed element: [0] for odd p, [0] + [1/2] for p = 2."""
    if p == 2:
        return single(ZERO) + single(HALF)
    return single(ZERO)


def _require_prime_pair(p: int, q: int) -> None:
    for n in (p, q):
        if n < 2 or any(n % d == 0 for d in range(2, int(n**0.5) + 1)):
            raise ValueError(f"{n} is not prime")
    if p >= q:
        raise ValueError("need p < q")


def _pair_x(p: int, q: int) -> FormalSum:
    return base_x(2 if 2 in (p, q) else p)


def _check_x(p: int, q: int, x: FormalSum) -> None:
    """The standing hypotheses on the seed: Y_p x, Y_q x in A', fixed by -1."""
    if not (in_A_prime(y_op(p, x)) and in_A_prime(y_op(q, x))):
        raise ValueError("seed element fails the half-integer-freeness hypothesis")
    if galois_act(-1, x) != x:
        raise ValueError("seed element is not fixed by negation")


def das_representative(p: int, q: int, H: Selector) -> FormalSum:
    """(H Y_p H Y_q - H Y_q H Y_p) applied to the pair's seed element."""
    _require_prime_pair(p, q)
    x = _pair_x(p, q)
    left = lift(H, y_op(p, lift(H, y_op(q, x))))
    right = lift(H, y_op(q, lift(H, y_op(p, x))))
    return left - right


def canonical_apq(p: int, q: int) -> FormalSum:
    """Closed form of the representative for the canonical lifting operator.

    Transcribed term by term; the odd case runs over half systems mod p
    and mod q, the p = 2 case over a half system mod q with quarter shifts.
    """
    _require_prime_pair(p, q)
    acc: dict[TorusPoint, int] = {}

    def bump(num: int, den: int, c: int) -> None:
        g = gcd(num, den)
        a = TorusPoint(num // g, den // g)
        v = acc.get(a, 0) + c
        if v:
            acc[a] = v
        elif a in acc:
            del acc[a]

    if p == 2:
        bump(1, 4, 1)
        for k in range((q + 1) // 2):
            bump(1 + 4 * k, 4 * q, -1)
        for j in range(1, (q + 1) // 2):
            bump(j, q, -1)
            bump((2 * j - 1) % (2 * q), 2 * q, -1)
            bump(j, 2 * q, 1)
            bump(2 * j - 1, 4 * q, 1)
        return FormalSum(acc.items())

    for i in range(1, (p + 1) // 2):
        bump(i, p, 1)
        for k in range((q + 1) // 2):
            bump(i + k * p, p * q, -1)
    for j in range(1, (q + 1) // 2):
        bump(j, q, -1)
        for m in range((p + 1) // 2):
            bump(j + m * q, p * q, 1)
    return FormalSum(acc.items())


def first_das_identity_check(p: int, q: int, H: Selector) -> bool:
    """2 a = (Y_p H Y_q - Y_q H Y_p) x + (1 + sigma_-1) a, exactly."""
    x = _pair_x(p, q)
    _check_x(p, q, x)
    hyq = lift(H, y_op(q, x))
    hyp = lift(H, y_op(p, x))
    a = lift(H, y_op(p, hyq)) - lift(H, y_op(q, hyp))
    rhs = (y_op(p, hyq) - y_op(q, hyp)) + a + galois_act(-1, a)
    return 2 * a == rhs


def second_das_identity_check(p: int, q: int, H: Selector, Hbar: Selector) -> bool:
    """a - abar = b + (1 + sigma_-1) c with the two-operator b and c."""
    x = _pair_x(p, q)
    _check_x(p, q, x)
    a = das_representative(p, q, H)
    abar = das_representative(p, q, Hbar)
    yqx = y_op(q, x)
    ypx = y_op(p, x)
    diff_q = lift(H, lift(H, yqx) - lift(Hbar, yqx))
    diff_p = lift(H, lift(H, ypx) - lift(Hbar, ypx))
    b = y_op(p, diff_q) - y_op(q, diff_p)
    c = lift(H, a - abar) - lift(H, b)
    return a - abar == b + c + galois_act(-1, c)


@dataclass(frozen=True)
class ConjugationData:
    """The cochain data at one Galois element.

    b_sigma decomposes as Y_p u_p - Y_q u_q through the stored witnesses,
    and (1 - sigma) a = b_sigma + (1 + sigma_-1) c_sigma holds exactly;
    both facts are validated at construction time.
    """

    b_sigma: FormalSum
    c_sigma: FormalSum
    u_p: FormalSum
    u_q: FormalSum


def conjugation_data(
    p: int, q: int, H: Selector, t: int, N: int | None = None
) -> ConjugationData:
    """Build and validate the conjugation cochain at sigma_t.

    N is the working level; it must be a multiple of 4pq (the default),
    and t must be a unit at that level.  The defining identity is a
    theorem, so a mismatch raises rather than returning falsehood.
    """
    level = N if N is not None else 4 * p * q
    if level % (4 * p * q) != 0:
        raise ValueError(f"level {level} is not a multiple of {4 * p * q}")
    if gcd(t, level) != 1:
        raise ValueError(f"{t} is not a unit mod {level}")
    x = _pair_x(p, q)
    _check_x(p, q, x)
    if galois_act(t, x) != x:
        raise ValueError("seed element moved by the Galois action")

    def one_minus_sigma(s: FormalSum) -> FormalSum:
        return s - galois_act(t, s)

    a = das_representative(p, q, H)
    u_p = lift(H, one_minus_sigma(lift(H, y_op(q, x))))
    u_q = lift(H, one_minus_sigma(lift(H, y_op(p, x))))
    b = y_op(p, u_p) - y_op(q, u_q)
    c = lift(H, one_minus_sigma(a)) - lift(H, b)
    if one_minus_sigma(a) != b + c + galois_act(-1, c):
        raise RuntimeError(
            f"conjugation identity failed at t={t} for ({p},{q}); "
            "this indicates a defect in the operator calculus"
        )
    return ConjugationData(b_sigma=b, c_sigma=c, u_p=u_p, u_q=u_q)


def torsion_witness_check(p: int, q: int) -> bool:
    """Exhibit 2 a_pq inside Y_p A + Y_q A + (1 + sigma_-1) A."""
    x = _pair_x(p, q)
    H = canonical_selector()
    a = canonical_apq(p, q)
    rhs = (
        y_op(p, lift(H, y_op(q, x)))
        - y_op(q, lift(H, y_op(p, x)))
        + a
        + galois_act(-1, a)
    )
    return 2 * a == rhs
