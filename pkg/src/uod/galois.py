"""Finite-level Galois machinery: inertia generators, square-root
cocycles, primitive roots, and the Legendre symbol.

The abelian Galois group acts on Q(zeta_N) through (Z/N)^x, so a single
integer t pins down an element at level N.  sigma_generator picks, by
Chinese remaindering, an integer that generates the inertia part at one
prime r and restricts trivially everywhere else; e_cocycle reads off
whether such an element flips sqrt(p).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclotomic import galois_act_cyclo, raise_level, sqrt_exact


@dataclass(frozen=True)
class GaloisElement:
    """An element of Gal(Q(zeta_N)/Q), named by its action zeta -> zeta^rep."""

    level: int
    rep: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be positive")
        object.__setattr__(self, "rep", self.rep % self.level)
        if gcd(self.rep, self.level) != 1:
            raise ValueError(f"{self.rep} is not a unit modulo {self.level}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p <= 2:
        raise ValueError("Legendre symbol needs an odd prime")
    v = pow(a % p, (p - 1) // 2, p)
    return v if v <= 1 else -1


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def _primitive_roots(pk: int, count: int) -> tuple[int, ...]:
    """The `count` smallest primitive roots modulo an odd prime power."""
    fac = _factorize(pk)
    if len(fac) != 1 or 2 in fac:
        raise ValueError(f"{pk} is not an odd prime power")
    (p, k), = fac.items()
    order = pk // p * (p - 1)
    checks = [order // r for r in _factorize(order)]
    found = []
    g = 2
    while len(found) < count:
        if g % p and all(pow(g, c, pk) != 1 for c in checks):
            found.append(g)
        g += 1
    return tuple(found)


def primitive_root(pk: int) -> int:
    """Smallest positive primitive root modulo an odd prime power."""
    return _primitive_roots(pk, 1)[0]


def _crt(a: int, m: int, b: int, n: int) -> int:
    """x with x = a mod m, x = b mod n, for coprime m, n."""
    return (a + m * (((b - a) * pow(m, -1, n)) % n)) % (m * n)


def sigma_generator(r: int, N: int, policy: str = "smallest") -> GaloisElement:
    """A finite-level generator of the inertia part at r inside (Z/N)^x.

    r = -1 gives complex conjugation; an odd prime r with r^k || N gets a
    primitive root modulo r^k and 1 elsewhere; r = 2 with 2^k || N gets
    5 mod 2^k (the pro-cyclic part fixing zeta_4; trivial when k = 2);
    a prime r not dividing N restricts trivially, so t = 1.

    policy chooses the primitive root: "smallest" or "second" (used to
    confirm the results do not depend on the choice).
    """
    if N % 4 != 0:
        raise ValueError("level must be divisible by 4")
    if policy not in ("smallest", "second"):
        raise ValueError(f"unknown primitive-root policy: {policy}")
    idx = 0 if policy == "smallest" else 1
    if r == -1:
        return GaloisElement(N, N - 1)
    if r < 2:
        raise ValueError("r must be -1 or a prime")
    fac = _factorize(N)
    if r not in fac:
        return GaloisElement(N, 1)
    rk = r ** fac[r]
    rest = N // rk
    if r == 2:
        target = 5 % rk if fac[2] >= 3 else 1
    else:
        target = _primitive_roots(rk, idx + 1)[idx]
    return GaloisElement(N, _crt(target, rk, 1, rest))


def e_cocycle(p: int, g: GaloisElement) -> int:
    """0 or 1 recording sigma(sqrt p) = (-1)^e sqrt p; p may be -1."""
    if g.level % (4 * abs(p)) != 0:
        raise ValueError(
            f"level {g.level} does not contain sqrt({p}); need 4*|p| to divide it")
    root = raise_level(sqrt_exact(p), g.level)
    return 0 if galois_act_cyclo(g.rep, root) == root else 1
