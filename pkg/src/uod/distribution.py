"""The free abelian group on Q/Z symbols and its operator calculus.

A formal sum is a finitely supported integer combination of symbols [a],
a a torus point.  On top of the plain group structure this module gives
the Galois action sigma_t [a] = [t a], the averaging operators

    Y_p [a] = [a] - sum_{i=0}^{p-1} [(a+i)/p],
    Theta_p = sigma_p^0 + ... + sigma_p^{(p-3)/2}   (p odd),

the parity projector P (keeps symbols whose point is a 2-adic unit), and
lifting operators H_T attached to a choice set T picking one member from
each pair {a, 1-a} with a not in (1/2)Z.

Selectors come in three flavors: the canonical one (T = (0, 1/2)), seeded
pseudorandom ones for property tests quantifying over partitions, and the
orbit-constrained ones used by the wedge pipeline, which pin down the
choice on the finitely many Galois orbits where cancellation is needed
and fall back to the canonical rule elsewhere.
"""
from __future__ import annotations

import hashlib
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Iterator

from .torus import (
    TorusPoint,
    ZERO,
    is_half_integer,
    is_two_adic_integer,
    is_two_adic_unit,
    make_point,
    negate_point,
    scale_point,
)


class FormalSum:
    """Finitely supported map TorusPoint -> int; zero coefficients pruned."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[TorusPoint, int]] = ()):
        acc: dict[TorusPoint, int] = {}
        for a, c in terms:
            acc[a] = acc.get(a, 0) + c
        self._terms = {a: c for a, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[TorusPoint, int]) -> "FormalSum":
        s = object.__new__(cls)
        s._terms = terms
        return s

    def items(self) -> Iterator[tuple[TorusPoint, int]]:
        return iter(self._terms.items())

    def coefficient(self, a: TorusPoint) -> int:
        return self._terms.get(a, 0)

    def support(self) -> set[TorusPoint]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self._terms)
        for a, c in other._terms.items():
            v = acc.get(a, 0) + c
            if v:
                acc[a] = v
            elif a in acc:
                del acc[a]
        return FormalSum._raw(acc)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self._terms)
        for a, c in other._terms.items():
            v = acc.get(a, 0) - c
            if v:
                acc[a] = v
            elif a in acc:
                del acc[a]
        return FormalSum._raw(acc)

    def __neg__(self) -> "FormalSum":
        return FormalSum._raw({a: -c for a, c in self._terms.items()})

    def __rmul__(self, k: int) -> "FormalSum":
        if k == 0:
            return FormalSum._raw({})
        return FormalSum._raw({a: k * c for a, c in self._terms.items()})

    def __str__(self) -> str:
        return format_formal_sum(self)

    def __repr__(self) -> str:
        return f"FormalSum({format_formal_sum(self)!r})"


def zero() -> FormalSum:
    return FormalSum._raw({})


def single(a: TorusPoint) -> FormalSum:
    return FormalSum._raw({a: 1})


def add(s: FormalSum, t: FormalSum) -> FormalSum:
    return s + t


def negate(s: FormalSum) -> FormalSum:
    return -s


def scale(k: int, s: FormalSum) -> FormalSum:
    return k * s


def deg(s: FormalSum) -> int:
    """Sum of all coefficients."""
    return sum(s._terms.values())


def galois_act(t: int, s: FormalSum) -> FormalSum:
    """sigma_t applied termwise: [a] -> [t a].

    t must be coprime to every denominator in the support, otherwise the
    action would not be invertible on those symbols.
    """
    acc: dict[TorusPoint, int] = {}
    for a, c in s._terms.items():
        if gcd(t, a.den) != 1:
            raise ValueError(f"{t} is not invertible mod {a.den}")
        b = scale_point(t, a)
        v = acc.get(b, 0) + c
        if v:
            acc[b] = v
        elif b in acc:
            del acc[b]
    return FormalSum._raw(acc)


def y_op(p: int, s: FormalSum) -> FormalSum:
    """The distribution-relation operator at p, extended linearly.

    >>> str(y_op(2, single(ZERO)))
    '-[1/2]'
    >>> str(y_op(3, single(ZERO)))
    '-[1/3] - [2/3]'
    """
    acc: dict[TorusPoint, int] = {}

    def bump(b: TorusPoint, c: int) -> None:
        v = acc.get(b, 0) + c
        if v:
            acc[b] = v
        elif b in acc:
            del acc[b]

    for a, c in s._terms.items():
        bump(a, c)
        num, den = a
        for i in range(p):
            bump(make_point(num + i * den, p * den), -c)
    return FormalSum._raw(acc)


def theta_op(p: int, t_p: int, s: FormalSum) -> FormalSum:
    """sigma^0 + sigma^1 + ... + sigma^{(p-3)/2} for sigma = sigma_{t_p}.

    For p = 3 this is the identity.  t_p must act invertibly on every
    denominator in the support.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("theta operator is defined for odd primes only")
    acc = zero()
    power = 1
    for _ in range((p - 1) // 2):
        acc = acc + galois_act(power, s)
        power *= t_p
    return acc


def in_A_prime(s: FormalSum) -> bool:
    """True iff no support point lies in (1/2)Z."""
    return all(not is_half_integer(a) for a in s._terms)


def in_A_doubleprime(s: FormalSum) -> bool:
    """True iff every support point is a 2-adic integer in (0, 1)."""
    return all(a.den % 2 == 1 and a.den > 1 for a in s._terms)


def p_projector(s: FormalSum) -> FormalSum:
    """Keep exactly the symbols at 2-adic units.

    Defined on sums supported in (0,1) at 2-adic integers; rejects the
    rest, since the complementary-projector identity only holds there.
    """
    if not in_A_doubleprime(s):
        raise ValueError("projector input must be supported on 2-adic integers in (0,1)")
    return FormalSum._raw({a: c for a, c in s._terms.items() if is_two_adic_unit(a)})


class Selector:
    """A choice of one member from each pair {a, 1-a}, a not in (1/2)Z.

    ``chooses(a)`` answers whether a itself is the chosen member ("a in T").
    Instances are stateless and deterministic, so they are safe to share.
    """

    __slots__ = ("_chooses", "name")

    def __init__(self, chooses: Callable[[TorusPoint], bool], name: str):
        self._chooses = chooses
        self.name = name

    def chooses(self, a: TorusPoint) -> bool:
        if is_half_integer(a):
            raise ValueError(f"selector queried off its domain: {a}")
        return self._chooses(a)

    def __repr__(self) -> str:
        return f"Selector({self.name})"


def lift(H: Selector, s: FormalSum) -> FormalSum:
    """H_T: keep the terms whose point the selector chooses.

    Input must avoid (1/2)Z entirely; idempotence and the complement
    identity H + sigma_{-1} H sigma_{-1} = 1 then hold by construction.
    """
    if not in_A_prime(s):
        raise ValueError("lift input must avoid half-integer points")
    return FormalSum._raw({a: c for a, c in s._terms.items() if H._chooses(a)})


def canonical_selector() -> Selector:
    """T = (0, 1/2): choose whichever of a, 1-a is below one half."""
    return Selector(lambda a: 2 * a.num < a.den, "canonical")


def seeded_selector(seed: int) -> Selector:
    """Deterministic pseudorandom partition, one independent coin per pair."""

    def chooses(a: TorusPoint) -> bool:
        lo = a if 2 * a.num < a.den else negate_point(a)
        digest = hashlib.sha256(f"{seed}:{lo.num}/{lo.den}".encode()).digest()
        flip = digest[0] & 1
        return (a == lo) == (flip == 0)

    return Selector(chooses, f"seeded({seed})")


@lru_cache(maxsize=None)
def _dlog_table(t: int, r: int) -> dict[int, int]:
    """Index of each unit mod r as a power of t; t must generate."""
    table: dict[int, int] = {}
    v = 1 % r
    for i in range(r - 1):
        table[v] = i
        v = v * t % r
    if len(table) != r - 1:
        raise ValueError(f"{t} does not generate the units mod {r}")
    return table


def specialized_selector(p: int, q: int, t_p: int, t_q: int) -> Selector:
    """The orbit-pinned partition that drives the wedge cancellations.

    For odd p < q (with t_p, t_q generating the units mod p resp. q) the
    choice set contains sigma_p^i [q/p] and sigma_p^i sigma_q^j [-1/p+1/q]
    exactly for i < (p-1)/2, and sigma_q^j [p/q] exactly for j < (q-1)/2.
    For p = 2 it contains [q/4], sigma_q^i [4/q] and sigma_q^i [1/2+2/q]
    for i < (q-1)/2, and every sigma_q^i [-1/4+1/q].  Off these orbits it
    falls back to the canonical a < 1/2 rule.  Membership is decided by
    discrete logarithms in base t_p / t_q.
    """
    if p == 2:
        inv4 = pow(4, -1, q)
        half_q = (q - 1) // 2

        def chooses2(a: TorusPoint) -> bool:
            num, den = a
            if den == 4:
                return num == q % 4
            if den == q:
                return _dlog_table(t_q, q)[num * inv4 % q] < half_q
            if den == 2 * q:
                return _dlog_table(t_q, q)[num * inv4 % q] < half_q
            if den == 4 * q:
                return num % 4 == (-q) % 4
            return 2 * num < den

        return Selector(chooses2, f"orbit-pinned(2,{q})")

    inv_q_mod_p = pow(q, -1, p)
    inv_p_mod_q = pow(p, -1, q)
    half_p = (p - 1) // 2
    half_q = (q - 1) // 2

    def chooses(a: TorusPoint) -> bool:
        num, den = a
        if den == p:
            return _dlog_table(t_p, p)[num * inv_q_mod_p % p] < half_p
        if den == q:
            return _dlog_table(t_q, q)[num * inv_p_mod_q % q] < half_q
        if den == p * q:
            return _dlog_table(t_p, p)[-num * inv_q_mod_p % p] < half_p
        return 2 * num < den

    return Selector(chooses, f"orbit-pinned({p},{q})")


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?"
    r"\[\s*(?P<num>-?\d+)\s*/\s*(?P<den>\d+)\s*\]"
)


def parse_formal_sum(text: str) -> FormalSum:
    """Parse ``sum := term (('+'|'-') term)*``, term ``[k*] [num/den]``.

    Whitespace never matters.  The bare string "0" is accepted for the
    empty sum so that rendering round-trips.

    >>> parse_formal_sum("[1/3] + [2/15] - [4/15] - [1/5]") == parse_formal_sum(
    ...     "-[4/15]+[1/3]-[1/5]+[2/15]")
    True
    """
    if text.strip() == "0":
        return zero()
    if not text.strip():
        raise ValueError("empty formal sum (the zero sum is written '0')")
    pos = 0
    first = True
    acc: dict[TorusPoint, int] = {}
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None:
            raise ValueError(f"bad formal sum near {text[pos:pos + 20]!r}")
        if m.group("sign") is None and not first:
            raise ValueError("terms after the first need an explicit sign")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        den = int(m.group("den"))
        if den == 0:
            raise ValueError("zero denominator in formal sum")
        a = make_point(int(m.group("num")), den)
        v = acc.get(a, 0) + sign * coeff
        if v:
            acc[a] = v
        elif a in acc:
            del acc[a]
        pos = m.end()
        first = False
        rest = text[pos:].strip()
        if not rest:
            break
    return FormalSum._raw(acc)


def format_formal_sum(s: FormalSum) -> str:
    """Render with positive terms first, larger points first within a sign.

    >>> format_formal_sum(parse_formal_sum("-[4/15]+[1/3]-[1/5]+[2/15]"))
    '[1/3] + [2/15] - [4/15] - [1/5]'
    """
    if not s:
        return "0"
    terms = sorted(
        s._terms.items(),
        key=lambda item: (item[1] < 0, Fraction(-item[0].num, item[0].den)),
    )
    parts: list[str] = []
    for a, c in terms:
        mag = abs(c)
        body = f"[{a.num}/{a.den}]" if mag == 1 else f"{mag}*[{a.num}/{a.den}]"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
