"""Exact arithmetic in cyclotomic fields.

A CycloNum is a dense coordinate vector over the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q(zeta_N), zeta = e^(2 pi i / N);
products are reduced modulo the N-th cyclotomic polynomial.  Coefficients
are ints or Fractions, never floats, so equality here is equality.

Dense vectors are the reference representation: simple, exactly right,
and fine at the small levels where tests and cross-checks live.  The
product-form engine (cycloprod) carries the heavy identities and is
checked against this module where both are feasible.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import bigreal
from .distribution import FormalSum

Coeff = int | Fraction


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder for a monic divisor, integer arithmetic."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        if c:
            q[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return q, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, ascending, by exact division of x^N - 1
    by the product of Phi_d over proper divisors d of N (memoized)."""
    if N < 1:
        raise ValueError("level must be positive")
    prod = [1]
    for d in _divisors(N)[:-1]:
        prod = _poly_mul(prod, list(cyclotomic_poly(d)))
    num = [0] * (N + 1)
    num[0] = -1
    num[N] = 1
    q, r = _poly_divmod_monic(num, prod)
    if any(r):
        raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(q)


@lru_cache(maxsize=None)
def _reduction_rows(N: int) -> tuple[tuple[int, ...], ...]:
    """Row j - phi(N) gives x^j reduced mod Phi_N, for j in [phi(N), N)."""
    poly = cyclotomic_poly(N)
    phi = len(poly) - 1
    rows = []
    row = [-c for c in poly[:phi]]
    rows.append(tuple(row))
    for _ in range(phi + 1, N):
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            base = rows[0]
            for i in range(phi):
                row[i] += top * base[i]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce_vector(vec: list[Coeff], N: int) -> tuple[Coeff, ...]:
    """Reduce a coefficient vector of length <= N to the power basis."""
    phi = len(cyclotomic_poly(N)) - 1
    if len(vec) < N:
        vec = vec + [0] * (N - len(vec))
    rows = _reduction_rows(N) if phi < N else ()
    for j in range(N - 1, phi - 1, -1):
        c = vec[j]
        if c:
            vec[j] = 0
            row = rows[j - phi]
            for i, r in enumerate(row):
                if r:
                    vec[i] += c * r
    return tuple(vec[:phi])


class CycloNum:
    """An element of Q(zeta_N) on the power basis.  Immutable."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: tuple[Coeff, ...]):
        self.level = level
        self.coeffs = coeffs

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"CycloNum(N={self.level}: {body})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_fraction(self) -> Fraction:
        """The value as a rational; raises if it is not one."""
        if any(self.coeffs[1:]):
            raise ValueError("value is not rational")
        return Fraction(self.coeffs[0]) if self.coeffs else Fraction(0)

    def __add__(self, other: "CycloNum") -> "CycloNum":
        a, b = _common(self, other)
        return CycloNum(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        a, b = _common(self, other)
        return CycloNum(a.level, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.level, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.level, tuple(c * other for c in self.coeffs))
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = _common(self, other)
        N = a.level
        buf: list[Coeff] = [0] * N
        bc = b.coeffs
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(bc):
                    if bj:
                        idx = i + j
                        if idx >= N:
                            idx -= N
                        buf[idx] += ai * bj
        return CycloNum(N, _reduce_vector(buf, N))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(1, 1) / other
            return CycloNum(self.level, tuple(c * q for c in self.coeffs))
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self * inv(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = from_rational(self.level, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = _common(self, other)
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    def __hash__(self):
        raise TypeError("CycloNum is not hashable; levels make it ambiguous")


def _common(a: CycloNum, b: CycloNum) -> tuple[CycloNum, CycloNum]:
    if a.level == b.level:
        return a, b
    M = lcm(a.level, b.level)
    return raise_level(a, M), raise_level(b, M)


def raise_level(z: CycloNum, M: int) -> CycloNum:
    """Embed Q(zeta_N) into Q(zeta_M) for N | M via zeta_N = zeta_M^(M/N)."""
    if M % z.level != 0:
        raise ValueError(f"{z.level} does not divide target level {M}")
    if M == z.level:
        return z
    k = M // z.level
    buf: list[Coeff] = [0] * M
    for i, c in enumerate(z.coeffs):
        if c:
            buf[k * i] += c
    return CycloNum(M, _reduce_vector(buf, M))


def zeta(N: int, k: int = 1) -> CycloNum:
    """The root of unity zeta_N^k."""
    phi = len(cyclotomic_poly(N)) - 1
    k %= N
    if k < phi:
        coeffs: list[Coeff] = [0] * phi
        coeffs[k] = 1
        return CycloNum(N, tuple(coeffs))
    buf: list[Coeff] = [0] * N
    buf[k] = 1
    return CycloNum(N, _reduce_vector(buf, N))


def from_rational(N: int, value: Fraction | int) -> CycloNum:
    phi = len(cyclotomic_poly(N)) - 1
    coeffs: list[Coeff] = [0] * phi
    coeffs[0] = Fraction(value) if not isinstance(value, int) else value
    return CycloNum(N, tuple(coeffs))


def inv(z: CycloNum) -> CycloNum:
    """Multiplicative inverse by the extended Euclidean algorithm
    against Phi_N; Phi_N is irreducible, so any nonzero z is a unit."""
    if z.is_zero():
        raise ZeroDivisionError("inverse of zero")
    N = z.level

    def deg(p: list[Fraction]) -> int:
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def divmod_frac(num: list[Fraction], den: list[Fraction]):
        num = list(num)
        dd = deg(den)
        lead = den[dd]
        q = [Fraction(0)] * max(deg(num) - dd + 1, 1)
        for i in range(deg(num) - dd, -1, -1):
            c = num[i + dd] / lead
            if c:
                q[i] = c
                for j in range(dd + 1):
                    num[i + j] -= c * den[j]
        return q, num

    r0 = [Fraction(c) for c in cyclotomic_poly(N)]
    r1 = [Fraction(c) for c in z.coeffs]
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while deg(r1) > 0:
        q, r = divmod_frac(r0, r1)
        r0, r1 = r1, r
        qt = _poly_mul_frac(q, t1)
        nt = [a - b for a, b in zip(t0 + [Fraction(0)] * len(qt), qt + [Fraction(0)] * len(t0))]
        t0, t1 = t1, nt
    c = r1[0]
    if not c:
        raise ZeroDivisionError("zero divisor against an irreducible modulus")
    phi = len(cyclotomic_poly(N)) - 1
    # deg t1 < phi by the Euclidean degree bound
    out = [(t / c) for t in (t1 + [Fraction(0)] * phi)[:phi]]
    return CycloNum(N, tuple(out))


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def galois_act_cyclo(t: int, z: CycloNum) -> CycloNum:
    """sigma_t: zeta |-> zeta^t, for t a unit mod the level."""
    N = z.level
    if gcd(t, N) != 1:
        raise ValueError(f"{t} is not a unit modulo {N}")
    buf: list[Coeff] = [0] * N
    for i, c in enumerate(z.coeffs):
        if c:
            buf[(t * i) % N] += c
    return CycloNum(N, _reduce_vector(buf, N))


def is_real(z: CycloNum) -> bool:
    return galois_act_cyclo(z.level - 1, z) == z if z.level > 2 else True


def _real_ball(z: CycloNum, prec: int) -> bigreal.BigReal:
    """Ball for the real part sum(c_i cos(2 pi i / N))."""
    N = z.level
    total = bigreal.from_int(0)
    for i, c in enumerate(z.coeffs):
        if c:
            term = bigreal.cos_pi_fraction(Fraction(2 * i, N), prec)
            if isinstance(c, int):
                term = bigreal.mul_int(term, c, prec)
            else:
                term = bigreal.mul(term, bigreal.from_fraction(c, prec), prec)
            total = bigreal.add(total, term, prec)
    return total


def complex_ball(z: CycloNum, prec: int) -> tuple[bigreal.BigReal, bigreal.BigReal]:
    """Balls for the real and imaginary parts of z under zeta = e(1/N)."""
    N = z.level
    re = bigreal.from_int(0)
    im = bigreal.from_int(0)
    for i, c in enumerate(z.coeffs):
        if not c:
            continue
        if isinstance(c, int):
            weight = bigreal.from_int(c)
        else:
            weight = bigreal.from_fraction(c, prec)
        cos_t = bigreal.cos_pi_fraction(Fraction(2 * i, N), prec)
        sin_t = bigreal.sin_pi_fraction(Fraction(2 * i, N), prec)
        re = bigreal.add(re, bigreal.mul(cos_t, weight, prec), prec)
        im = bigreal.add(im, bigreal.mul(sin_t, weight, prec), prec)
    return re, im


def sign_of_real(z: CycloNum, max_prec: int = 1 << 14) -> int:
    """Certified sign of a real cyclotomic number: -1, 0 or 1.

    Zero is decided exactly; otherwise ball evaluation at doubling
    precision terminates because a nonzero algebraic number is nonzero
    by some margin.
    """
    if not is_real(z):
        raise ValueError("number is not real")
    if z.is_zero():
        return 0
    prec = 128
    while prec <= max_prec:
        val = _real_ball(z, prec)
        if not val.contains_zero():
            return val.sign()
        prec *= 2
    raise RuntimeError("sign not certified below the precision ceiling")


def _one_minus_zeta(N: int, j: int) -> CycloNum:
    return from_rational(N, 1) - zeta(N, j)


def xi_exact(s: FormalSum, N: int) -> CycloNum:
    """xi(s) = prod over points of (1 - e(a))^c, with [0] |-> 1, in Q(zeta_N).

    Every denominator in s must divide N.
    """
    num = from_rational(N, 1)
    den = from_rational(N, 1)
    for a, c in s.items():
        if a.den == 1:
            continue
        if N % a.den != 0:
            raise ValueError(f"denominator {a.den} does not divide level {N}")
        factor = _one_minus_zeta(N, a.num * (N // a.den))
        for _ in range(abs(c)):
            if c > 0:
                num = num * factor
            else:
                den = den * factor
    return num * inv(den) if den != 1 else num


def sin_exact(s: FormalSum, N: int) -> CycloNum:
    """prod (2 sin(pi a))^c as an exact element of Q(zeta_N).

    Uses 2 sin(pi a) = i e(-a/2) (1 - e(a)), so the level must carry the
    half-angle twists: 4 | N and 2*den | N for every point.  The zero
    class contributes the empty factor 1, by the defining case split.
    """
    if N % 4 != 0:
        raise ValueError("level must be divisible by 4")
    zexp = 0
    num = from_rational(N, 1)
    den = from_rational(N, 1)
    for a, c in s.items():
        if a.den == 1:
            continue
        if N % (2 * a.den) != 0:
            raise ValueError(f"level {N} lacks the half-angle of 1/{a.den}")
        zexp += c * (N // 4 - a.num * (N // (2 * a.den)))
        factor = _one_minus_zeta(N, a.num * (N // a.den))
        for _ in range(abs(c)):
            if c > 0:
                num = num * factor
            else:
                den = den * factor
    out = zeta(N, zexp % N) * num
    return out * inv(den) if den != 1 else out


def _legendre(a: int, ell: int) -> int:
    v = pow(a % ell, (ell - 1) // 2, ell)
    return v if v <= 1 else -1


def sqrt_exact(d: int) -> CycloNum:
    """Square root of a squarefree integer inside Q(zeta_(4|d|)).

    Positive d gives the positive root; negative d gives i * sqrt(|d|).
    Each prime factor contributes a quadratic Gauss sum, normalized to be
    real positive; the choice is certified afterwards by ball evaluation.
    """
    if d == 0:
        raise ValueError("square root of zero is trivial; refuse the level")
    m = abs(d)
    primes = []
    t = m
    p = 2
    while p * p <= t:
        if t % p == 0:
            primes.append(p)
            t //= p
            if t % p == 0:
                raise ValueError(f"{d} is not squarefree")
        p += 1
    if t > 1:
        primes.append(t)
    N = 4 * m
    acc = from_rational(N, 1)
    if d < 0:
        acc = zeta(N, N // 4)
    for ell in primes:
        if ell == 2:
            g = zeta(N, N // 8) + zeta(N, N - N // 8)
        else:
            buf: list[Coeff] = [0] * N
            step = N // ell
            for a in range(1, ell):
                buf[(a * step) % N] += _legendre(a, ell)
            g = CycloNum(N, _reduce_vector(buf, N))
            if ell % 4 == 3:
                g = g * zeta(N, 3 * (N // 4))
        acc = acc * g
    check = acc if d > 0 else acc * zeta(N, 3 * (N // 4))
    if sign_of_real(check) != 1:
        raise ArithmeticError("Gauss sum normalization came out negative")
    return acc
