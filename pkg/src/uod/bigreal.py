"""Certified real arithmetic on integer balls.

A BigReal is a ball (man * 2^exp) +/- (rad * 2^exp): the represented real
is guaranteed to lie inside.  Mantissa and radius are plain integers at a
shared binary exponent, so every primitive below accounts for its own
rounding exactly: each floor division or shift that can lose information
adds its loss to the radius.  Nothing here is heuristic; if an operation
cannot certify a fact (the sign of a ball touching zero, say) it raises.

The transcendental layer works at prec + GUARD internal bits.  pi comes
from Machin's formula with exact integer term sums, sin/cos reduce by
symmetry and repeated halving into a fast Taylor regime, exp reduces by
ln 2 and halving, log goes through atanh.  gamma uses Spouge's expansion,
whose truncation error is an explicit function of its parameter; the
coefficient balls for a given precision are cached.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .torus import TorusPoint

GUARD = 32


class BigReal:
    """Ball man*2^exp +/- rad*2^exp with rad >= 0.  Treat as immutable."""

    __slots__ = ("man", "exp", "rad")

    def __init__(self, man: int, exp: int, rad: int = 0):
        if rad < 0:
            raise ValueError("negative radius")
        self.man = man
        self.exp = exp
        self.rad = rad

    def __repr__(self) -> str:
        return f"BigReal({to_decimal_string(self, 12)})"

    def contains(self, value: Fraction | int) -> bool:
        """Exact test: does the ball contain this rational?"""
        v = Fraction(value)
        unit = Fraction(2) ** self.exp
        return (self.man - self.rad) * unit <= v <= (self.man + self.rad) * unit

    def contains_zero(self) -> bool:
        return abs(self.man) <= self.rad

    def sign(self) -> int:
        """Certified sign; raises if the ball straddles zero."""
        if abs(self.man) <= self.rad:
            raise ValueError("ball touches zero; sign not certified")
        return 1 if self.man > 0 else -1

    def max_abs(self) -> Fraction:
        return (abs(self.man) + self.rad) * Fraction(2) ** self.exp

    def midpoint(self) -> Fraction:
        return self.man * Fraction(2) ** self.exp

    def radius(self) -> Fraction:
        return self.rad * Fraction(2) ** self.exp


def _round(man: int, exp: int, rad: int, prec: int) -> BigReal:
    """Trim the mantissa to about prec bits, growing the radius to cover."""
    excess = max(man.bit_length(), rad.bit_length()) - prec - 8
    if excess > 0:
        man >>= excess
        rad = (rad >> excess) + 2
        exp += excess
    return BigReal(man, exp, rad)


def _to_fixed(x: BigReal, w: int) -> tuple[int, int]:
    """(man, rad) of x at exponent -w; any shift-down loss goes to rad."""
    shift = x.exp + w
    if shift >= 0:
        return x.man << shift, x.rad << shift
    return x.man >> -shift, (x.rad >> -shift) + 2


def from_int(n: int) -> BigReal:
    return BigReal(n, 0, 0)


def from_fraction(value: Fraction | int, prec: int) -> BigReal:
    v = Fraction(value)
    w = prec + GUARD
    man = (v.numerator << w) // v.denominator
    return BigReal(man, -w, 0 if v.denominator == 1 else 1)


def _align(x: BigReal, y: BigReal) -> tuple[int, int, int, int, int]:
    e = min(x.exp, y.exp)
    sx, sy = x.exp - e, y.exp - e
    return x.man << sx, x.rad << sx, y.man << sy, y.rad << sy, e


def add(x: BigReal, y: BigReal, prec: int) -> BigReal:
    mx, rx, my, ry, e = _align(x, y)
    return _round(mx + my, e, rx + ry, prec + GUARD)


def sub(x: BigReal, y: BigReal, prec: int) -> BigReal:
    mx, rx, my, ry, e = _align(x, y)
    return _round(mx - my, e, rx + ry, prec + GUARD)


def neg(x: BigReal) -> BigReal:
    return BigReal(-x.man, x.exp, x.rad)


def mul(x: BigReal, y: BigReal, prec: int) -> BigReal:
    man = x.man * y.man
    rad = abs(x.man) * y.rad + abs(y.man) * x.rad + x.rad * y.rad
    return _round(man, x.exp + y.exp, rad, prec + GUARD)


def mul_int(x: BigReal, k: int, prec: int) -> BigReal:
    return _round(x.man * k, x.exp, x.rad * abs(k), prec + GUARD)


def inv(x: BigReal, prec: int) -> BigReal:
    """1/x for a ball strictly away from zero.

    With x = m*2^e and lo = |m| - rad > 0, the reciprocal over the ball
    differs from 1/m by at most rad/lo^2 (in units of 2^-e).
    """
    if abs(x.man) <= x.rad:
        raise ZeroDivisionError("ball touches zero")
    w = prec + GUARD
    lo = abs(x.man) - x.rad
    man = (1 << (2 * w)) // x.man
    rad = (x.rad << (2 * w)) // (lo * lo) + 2
    return _round(man, -2 * w - x.exp, rad, w)


def div(x: BigReal, y: BigReal, prec: int) -> BigReal:
    return mul(x, inv(y, prec + GUARD), prec)


def sqrt(x: BigReal, prec: int) -> BigReal:
    """Square root; the ball's lower edge is clamped at zero."""
    if x.man < 0 and abs(x.man) > x.rad:
        raise ValueError("ball is negative")
    w = prec + GUARD
    lo = max(x.man - x.rad, 0)
    hi = x.man + x.rad
    shift = x.exp + 2 * w
    if shift >= 0:
        s_lo = isqrt(lo << shift)
        s_hi = isqrt(hi << shift) + 1
    else:
        s_lo = isqrt(lo >> -shift)
        s_hi = isqrt((hi >> -shift) + 1) + 1
    man = (s_lo + s_hi) // 2
    return _round(man, -w, s_hi - man + 1, w)


@lru_cache(maxsize=None)
def _atan_inv(k: int, w: int) -> tuple[int, int]:
    """arctan(1/k) * 2^w with certified error, by the alternating series."""
    total = 0
    term_den = k
    sign = 1
    n = 1
    steps = 0
    while True:
        term = (1 << w) // (n * term_den)
        if term == 0:
            break
        total += sign * term
        sign = -sign
        n += 2
        term_den *= k * k
        steps += 1
    return total, steps + 2


@lru_cache(maxsize=None)
def _pi_fixed(w: int) -> tuple[int, int]:
    a5, r5 = _atan_inv(5, w)
    a239, r239 = _atan_inv(239, w)
    return 16 * a5 - 4 * a239, 16 * r5 + 4 * r239 + 1


def pi(prec: int) -> BigReal:
    w = prec + GUARD
    man, rad = _pi_fixed(w)
    return BigReal(man, -w, rad)


@lru_cache(maxsize=None)
def _ln2_fixed(w: int) -> tuple[int, int]:
    """ln 2 = 2 atanh(1/3), exact integer series."""
    total = 0
    den = 3
    n = 1
    steps = 0
    while True:
        term = (1 << w) // (n * den)
        if term == 0:
            break
        total += term
        n += 2
        den *= 9
        steps += 1
    return 2 * total, 2 * steps + 4


def _sincos_taylor(um: int, ur: int, w: int) -> tuple[int, int, int, int]:
    """(sin, cos) of a fixed-point ball u with |u| <= 2^w / 8.

    Returns (sin_man, sin_rad, cos_man, cos_rad) at scale 2^w.  Both
    derivatives are bounded by 1, so the input radius maps straight over.
    """
    u2 = um * um >> w
    s = um
    term = um
    k = 1
    while term:
        term = -((term * u2 >> w) // ((2 * k) * (2 * k + 1)))
        s += term
        k += 1
    c = 1 << w
    cterm = c
    j = 1
    while cterm:
        cterm = -((cterm * u2 >> w) // ((2 * j - 1) * (2 * j)))
        c += cterm
        j += 1
    slack = 4 * (k + j) + 8
    return s, ur + slack, c, ur + slack


def _sincos_of_ball(um: int, ur: int, w: int) -> tuple[int, int, int, int]:
    """(sin, cos) for any |u| < 8 at scale 2^w, by halving into Taylor range."""
    halvings = 0
    while abs(um) > (1 << w) // 8:
        um //= 2
        ur = ur // 2 + 1
        halvings += 1
    s, sr, c, cr = _sincos_taylor(um, ur, w)
    one = 1 << w
    for _ in range(halvings):
        # sin 2u = 2 sin u cos u ; cos 2u = 1 - 2 sin^2 u
        ns = 2 * (s * c >> w)
        nsr = 2 * ((abs(s) * cr + abs(c) * sr + sr * cr) >> w) + 4
        nc = one - 2 * (s * s >> w)
        ncr = 2 * ((2 * abs(s) * sr + sr * sr) >> w) + 4
        s, sr, c, cr = ns, nsr, nc, ncr
    return s, sr, c, cr


def sin_pi_fraction(value: Fraction, prec: int) -> BigReal:
    """sin(pi * value) for an exact rational, certified."""
    w = prec + GUARD
    frac = value % 2
    flip = 1 if frac < 1 else -1
    r = frac if frac < 1 else frac - 1
    if r > Fraction(1, 2):
        r = 1 - r
    pim, pir = _pi_fixed(w)
    um = pim * r.numerator // r.denominator
    s, sr, _c, _cr = _sincos_of_ball(um, pir + 2, w)
    return _round(flip * s, -w, sr, w)


def cos_pi_fraction(value: Fraction, prec: int) -> BigReal:
    return sin_pi_fraction(value + Fraction(1, 2), prec)


def sin_pi_rational(a: TorusPoint, prec: int) -> BigReal:
    """sin(pi a) for a torus point in canonical [0,1) form."""
    return sin_pi_fraction(Fraction(a.num, a.den), prec)


def exp(x: BigReal, prec: int) -> BigReal:
    """e^x, certified, via ln 2 reduction then halving into a short Taylor."""
    w = prec + GUARD
    xm, xr = _to_fixed(x, w)
    ln2m, ln2r = _ln2_fixed(w)
    n = (2 * xm + ln2m) // (2 * ln2m)
    um = xm - n * ln2m
    ur = xr + abs(n) * ln2r + 1
    halvings = 0
    while abs(um) > (1 << w) >> 4:
        um //= 2
        ur = ur // 2 + 1
        halvings += 1
    total = 1 << w
    term = total
    k = 1
    while term:
        term = (term * um >> w) // k
        total += term
        k += 1
    rad = 2 * ur + 4 * k + 8
    for _ in range(halvings):
        rad = ((2 * abs(total) * rad + rad * rad) >> w) + 4
        total = total * total >> w
    return _round(total, -w + n, rad, w)


def log(x: BigReal, prec: int) -> BigReal:
    """Natural log of a certainly-positive ball, via atanh."""
    if x.man - x.rad <= 0:
        raise ValueError("log needs a ball strictly above zero")
    w = prec + GUARD
    s = x.man.bit_length() - 1 + x.exp
    shift = w + 1 - x.man.bit_length()
    if shift >= 0:
        ym = x.man << shift
        yr = x.rad << shift
    else:
        ym = x.man >> -shift
        yr = (x.rad >> -shift) + 2
    one = 1 << w
    # y sits in [1,2); z = (y-1)/(y+1) has |z| < 1/3
    zm = ((ym - one) << w) // (ym + one)
    zr = yr + 2
    z2 = zm * zm >> w
    total = zm
    term = zm
    k = 1
    while term:
        term = term * z2 >> w
        total += term // (2 * k + 1)
        k += 1
    rad = 3 * zr + 4 * k + 8
    ln2m, ln2r = _ln2_fixed(w)
    return _round(2 * total + s * ln2m, -w, 2 * rad + abs(s) * ln2r, w)


def pow_rational(x: BigReal, r: Fraction | int, prec: int) -> BigReal:
    """x^r through exp(r log x), with fast paths for small integer r."""
    r = Fraction(r)
    if r == 0:
        return from_int(1)
    if r.denominator == 1 and 0 < r.numerator < 64:
        acc = from_int(1)
        for _ in range(r.numerator):
            acc = mul(acc, x, prec + GUARD)
        return acc
    if r == Fraction(1, 2):
        return sqrt(x, prec)
    lg = log(x, prec + GUARD)
    return exp(mul(lg, from_fraction(r, prec + GUARD), prec + GUARD), prec)


@lru_cache(maxsize=None)
def _spouge_params(prec: int) -> tuple[int, int, tuple[BigReal, ...]]:
    """Spouge parameter c and coefficient balls for a target precision.

    coeffs[0] is sqrt(2 pi); coeffs[k] for k >= 1 is
    (-1)^(k-1)/(k-1)! * (c-k)^(k-1/2) * e^(c-k).  The truncation error of
    the series for Re z >= 0 stays below c^(-1/2) (2 pi)^(-(c+1/2)),
    roughly 2.65 bits per unit of c.
    """
    w = prec + 96
    c = int((prec + 24) / 2.651) + 2
    pim, pir = _pi_fixed(w)
    coeffs = [sqrt(BigReal(2 * pim, -w, 2 * pir), w)]
    fact = 1
    for k in range(1, c):
        pw = pow_rational(from_int(c - k), Fraction(2 * k - 1, 2), w)
        val = mul(pw, exp(from_int(c - k), w), w)
        sign = 1 if k % 2 == 1 else -1
        ck = div(val, from_int(fact), w)
        coeffs.append(BigReal(sign * ck.man, ck.exp, ck.rad))
        fact *= k
    return c, w, tuple(coeffs)


def _spouge_eval(z: Fraction, prec: int) -> BigReal:
    """Gamma(z+1) for rational z >= 0, truncation error folded into the ball."""
    c, w, coeffs = _spouge_params(prec)
    zb = from_fraction(z, w)
    total = coeffs[0]
    for k in range(1, c):
        total = add(total, div(coeffs[k], add(zb, from_int(k), w), w), w)
    zc = add(zb, from_int(c), w)
    val = mul(mul(pow_rational(zc, z + Fraction(1, 2), w), exp(neg(zc), w), w),
              total, w)
    err_bits = int(2.651 * c) - 6
    return BigReal(val.man, val.exp, val.rad + (abs(val.man) >> err_bits) + 2)


def gamma(a: Fraction | int, prec: int) -> BigReal:
    """Gamma of a positive rational, by Spouge's expansion."""
    a = Fraction(a)
    if a <= 0:
        raise ValueError("gamma needs a positive argument")
    w = prec + GUARD
    if a >= 1:
        val = _spouge_eval(a - 1, prec)
        return _round(val.man, val.exp, val.rad, w)
    val = _spouge_eval(a, prec)
    return div(val, from_fraction(a, w), prec)


def to_decimal_string(x: BigReal, max_digits: int = 50) -> str:
    """Render only decimal digits the ball certifies."""
    if x.rad == 0 and x.man == 0:
        return "0"
    unit = Fraction(2) ** x.exp
    mid = x.man * unit
    rad = x.rad * unit
    digits = 0
    scale = 1
    while digits < max_digits and (x.rad == 0 or rad * scale < Fraction(1, 20)):
        digits += 1
        scale *= 10
    if digits == 0:
        return f"~{float(mid):.3g} (uncertified)"
    n = round(mid * scale)
    sign = "-" if n < 0 else ""
    whole, part = divmod(abs(n), scale)
    return f"{sign}{whole}.{str(part).zfill(digits)}"
