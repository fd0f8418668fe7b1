"""Cyclotomic numbers in multiplicative product form, with exact
equality decided by packed integer polynomials.

A CycloProduct holds zeta_N^zexp * prod_j (1 - zeta_N^j)^(c_j) without
ever expanding it.  These presentations multiply, conjugate and raise to
powers for free, and carry an exactly rational argument, since
arg(1 - zeta^j) = pi (j/N - 1/2) for 0 < j < N.  Equality never leaves
the integers:

    the value is 1   iff   x^g P(x) - Q(x) == 0  mod Phi_N(x),

where P and Q collect the positive and negative factors.  The test packs
polynomial coefficients into a single big integer at digit width b (the
true coefficients are bounded via ||prod (1-x^j)^c||_1 <= 2^(sum |c|)),
multiplies by the cofactor (x^N - 1)/Phi_N and reduces modulo 2^(bN) - 1,
where x = 2^b satisfies x^N = 1 exactly.  A nonzero residue disproves the
identity; a zero residue proves it, because every true coefficient stays
strictly below 2^(b-1) and balanced digit expansions at that width are
unique.  gmpy2 supplies the big-integer muscle.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpz

from .cyclotomic import CycloNum, cyclotomic_poly, from_rational, inv as _dense_inv, zeta as _dense_zeta, _poly_divmod_monic
from .distribution import FormalSum


@lru_cache(maxsize=None)
def cofactor_poly(N: int) -> tuple[int, ...]:
    """(x^N - 1)/Phi_N, the product of Phi_d over proper divisors d."""
    num = [0] * (N + 1)
    num[0] = -1
    num[N] = 1
    q, r = _poly_divmod_monic(num, list(cyclotomic_poly(N)))
    if any(r):
        raise ArithmeticError("cofactor division left a remainder")
    return tuple(q)


@lru_cache(maxsize=None)
def _cofactor_l1_bits(N: int) -> int:
    return sum(abs(c) for c in cofactor_poly(N)).bit_length()


def _pack(coeffs, b: int, N: int) -> mpz:
    """sum(c_j * 2^(b j)) for (j, c) pairs, via two byte buffers."""
    if b % 8:
        raise ValueError("digit width must be a whole number of bytes")
    step = b // 8
    pos = bytearray(N * step)
    neg = bytearray(N * step)
    for j, c in coeffs:
        if not c:
            continue
        buf = pos if c > 0 else neg
        raw = abs(c).to_bytes(step, "little")
        off = j * step
        buf[off:off + step] = raw
    return mpz(int.from_bytes(pos, "little")) - mpz(int.from_bytes(neg, "little"))


@lru_cache(maxsize=None)
def _packed_cofactor(N: int, b: int) -> mpz:
    return _pack(enumerate(cofactor_poly(N)), b, N)


def _bucket(bits: int) -> int:
    """Round a digit-width requirement up to a multiple of 64 bits, so
    packed cofactors get reused across calls of similar size."""
    return max(64, ((bits + 63) // 64) * 64)


def _raw_product(N: int, b: int, factors: dict[int, int]) -> mpz:
    """Packed prod (1 - x^j)^e over e > 0, folded along x^N = 1.

    Intermediate packings are only correct modulo 2^(bN) - 1, which is
    all the final test needs.
    """
    cap = mpz(1) << (b * N)
    X = mpz(1)
    for j in sorted(factors):
        e = factors[j]
        sh = b * j
        for _ in range(e):
            X -= X << sh
            q, r = divmod(X, cap)
            X = r + q
    return X


def _presentation_is_one(N: int, zexp: int, factors: dict[int, int]) -> bool:
    pos = {j: c for j, c in factors.items() if c > 0}
    neg = {j: -c for j, c in factors.items() if c < 0}
    if not pos and not neg:
        return zexp % N == 0
    k_a = sum(pos.values())
    k_b = sum(neg.values())
    b = _bucket(max(k_a, k_b) + _cofactor_l1_bits(N) + 6)
    cap = mpz(1) << (b * N)
    A = _raw_product(N, b, pos)
    A <<= b * (zexp % N)
    q, r = divmod(A, cap)
    A = r + q
    B = _raw_product(N, b, neg)
    M = cap - 1
    residue = ((A - B) * _packed_cofactor(N, b)) % M
    return residue == 0


class CycloProduct:
    """zeta_N^zexp * prod (1 - zeta_N^j)^(c_j); always a nonzero number."""

    __slots__ = ("level", "zexp", "factors")

    def __init__(self, level: int, zexp: int, factors: dict[int, int]):
        clean: dict[int, int] = {}
        for j, c in factors.items():
            if c:
                jj = j % level
                if jj == 0:
                    raise ValueError("factor 1 - zeta^0 vanishes")
                clean[jj] = clean.get(jj, 0) + c
        self.level = level
        self.zexp = zexp % level
        self.factors = {j: c for j, c in clean.items() if c}

    @classmethod
    def one(cls, N: int) -> "CycloProduct":
        return cls(N, 0, {})

    def __repr__(self) -> str:
        parts = [f"z^{self.zexp}"] if self.zexp else []
        for j in sorted(self.factors):
            parts.append(f"(1-z^{j})^{self.factors[j]}")
        return f"CycloProduct(N={self.level}: {' * '.join(parts) or '1'})"

    def mul(self, other: "CycloProduct") -> "CycloProduct":
        a, b = _match(self, other)
        merged = dict(a.factors)
        for j, c in b.factors.items():
            merged[j] = merged.get(j, 0) + c
        return CycloProduct(a.level, a.zexp + b.zexp, merged)

    def pow(self, k: int) -> "CycloProduct":
        if k == 0:
            return CycloProduct.one(self.level)
        return CycloProduct(self.level, self.zexp * k,
                            {j: c * k for j, c in self.factors.items()})

    def div(self, other: "CycloProduct") -> "CycloProduct":
        return self.mul(other.pow(-1))

    def galois(self, t: int) -> "CycloProduct":
        """sigma_t maps each factor 1 - zeta^j to 1 - zeta^(tj)."""
        N = self.level
        if gcd(t, N) != 1:
            raise ValueError(f"{t} is not a unit modulo {N}")
        return CycloProduct(N, self.zexp * t,
                            {(t * j) % N: c for j, c in self.factors.items()})

    def conj(self) -> "CycloProduct":
        return self.galois(self.level - 1)

    def scale_zeta(self, k: int) -> "CycloProduct":
        return CycloProduct(self.level, self.zexp + k, dict(self.factors))

    def raise_level(self, M: int) -> "CycloProduct":
        if M % self.level != 0:
            raise ValueError(f"{self.level} does not divide {M}")
        k = M // self.level
        return CycloProduct(M, self.zexp * k,
                            {j * k: c for j, c in self.factors.items()})

    def arg_over_pi(self) -> Fraction:
        """The argument divided by pi, exactly, reduced into [0, 2)."""
        total = Fraction(2 * self.zexp, self.level)
        for j, c in self.factors.items():
            total += c * (Fraction(j, self.level) - Fraction(1, 2))
        return total % 2

    def is_real(self) -> bool:
        return self.arg_over_pi() in (0, 1)

    def sign_real(self) -> int:
        """Sign of a presentation known to be real, from the exact argument."""
        a = self.arg_over_pi()
        if a == 0:
            return 1
        if a == 1:
            return -1
        raise ValueError("presentation is not a real number")

    def is_one(self) -> bool:
        if self.arg_over_pi() != 0:
            return False
        return _presentation_is_one(self.level, self.zexp, self.factors)

    def equals(self, other: "CycloProduct") -> bool:
        return self.div(other).is_one()

    def to_cyclonum(self) -> CycloNum:
        """Densify; meant for cross-checks at small levels."""
        N = self.level
        num = _dense_zeta(N, self.zexp)
        den = from_rational(N, 1)
        for j, c in self.factors.items():
            factor = from_rational(N, 1) - _dense_zeta(N, j)
            for _ in range(abs(c)):
                if c > 0:
                    num = num * factor
                else:
                    den = den * factor
        return num * _dense_inv(den) if den != 1 else num


def _match(a: CycloProduct, b: CycloProduct) -> tuple[CycloProduct, CycloProduct]:
    if a.level == b.level:
        return a, b
    if a.level % b.level == 0:
        return a, b.raise_level(a.level)
    if b.level % a.level == 0:
        return a.raise_level(b.level), b
    raise ValueError("incompatible presentation levels")


def xi_presentation(s: FormalSum, N: int) -> CycloProduct:
    """xi(s) = prod (1 - e(a))^c with [0] |-> 1, in product form."""
    factors: dict[int, int] = {}
    for a, c in s.items():
        if a.den == 1:
            continue
        if N % a.den != 0:
            raise ValueError(f"denominator {a.den} does not divide level {N}")
        j = a.num * (N // a.den)
        factors[j] = factors.get(j, 0) + c
    return CycloProduct(N, 0, factors)


def sin_twist(s: FormalSum, N: int) -> int:
    """The zeta exponent relating sin to xi at level N:
    prod (2 sin pi a)^c = zeta_N^twist * xi(s)."""
    if N % 4 != 0:
        raise ValueError("level must be divisible by 4")
    e = 0
    for a, c in s.items():
        if a.den == 1:
            continue  # sin[0] = 1 by the defining case split
        if N % (2 * a.den) != 0:
            raise ValueError(f"level {N} lacks the half-angle of 1/{a.den}")
        e += c * (N // 4 - a.num * (N // (2 * a.den)))
    return e % N


def sin_presentation(s: FormalSum, N: int) -> CycloProduct:
    """prod (2 sin pi a)^c in product form, via
    2 sin(pi a) = i e(-a/2) (1 - e(a))."""
    return xi_presentation(s, N).scale_zeta(sin_twist(s, N))
