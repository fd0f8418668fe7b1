"""The Log Wedge pipeline: v-families, alpha coefficients, wedge classes.

For a number u whose Galois translates are squares times u, a family
{v_t} with sigma_t(u) = v_t^2 u determines

    D(u mod squares) = sum over r < s of log_(-1) alpha_(r,s) e_r ^ e_s,

where alpha_(r,s) compares sigma_r(v_s)/v_s against the same expression
with r and s swapped.  Two pipelines are built here: u = sqrt(l), whose
v-family lives in {1, i}, and u = sin a_pq, whose v-family is made of
inverse sine monomials of the conjugation cochains c_sigma.  Everything
is certified: family invariants are validated exactly at construction,
and every alpha is an exact root-of-unity computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import cycloprod as cp
from .cyclotomic import CycloNum, galois_act_cyclo, sqrt_exact
from .das import conjugation_data, das_representative
from .distribution import (
    FormalSum,
    Selector,
    deg,
    galois_act,
    p_projector,
    specialized_selector,
)
from .galois import sigma_generator


def _s_key(r: int) -> int:
    """Sort key realizing the order -1 < 2 < 3 < 5 < ... on S."""
    return 0 if r == -1 else r


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _units(N: int) -> list[int]:
    return [t for t in range(1, N) if gcd(t, N) == 1]


@dataclass(frozen=True)
class WedgeClass:
    """An element of the exterior square of H^1, as a set of basis pairs.

    Each pair (r, s) present means coefficient 1 on e_r ^ e_s; absent
    means 0.  Pairs are stored with r before s in the order on S.
    """

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for r, s in self.pairs:
            if r == s or _s_key(r) >= _s_key(s):
                raise ValueError(f"pair ({r},{s}) is not ordered in S")
            for m in (r, s):
                if m != -1 and not _is_prime(m):
                    raise ValueError(f"{m} is not -1 or a prime")

    def __str__(self) -> str:
        ordered = sorted(self.pairs, key=lambda rs: (_s_key(rs[0]), _s_key(rs[1])))
        return " + ".join(f"e_{r} ^ e_{s}" for r, s in ordered) or "0"

    def as_pairs(self) -> list[list[int]]:
        return [list(rs) for rs in
                sorted(self.pairs, key=lambda rs: (_s_key(rs[0]), _s_key(rs[1])))]


class VFamily:
    """A validated family {v_t} over (Z/N)^x with sigma_t(u) = v_t^2 u.

    Instances come out of the two pipeline builders below, which check
    the defining invariant exactly for every t before construction.
    Values are held in product form; value() densifies on demand.
    """

    __slots__ = ("level", "_pres")

    def __init__(self, level: int, presentations: dict[int, cp.CycloProduct]):
        missing = set(_units(level)) - set(presentations)
        if missing:
            raise ValueError(f"family is not total: missing t={sorted(missing)[:3]}...")
        self.level = level
        self._pres = dict(presentations)

    def presentation(self, t: int) -> cp.CycloProduct:
        key = t % self.level
        if key not in self._pres:
            raise ValueError(f"{t} is not a unit modulo {self.level}")
        return self._pres[key]

    def value(self, t: int) -> CycloNum:
        return self.presentation(t).to_cyclonum()

    def units(self) -> list[int]:
        return sorted(self._pres)


def alpha(v: VFamily, r: int, s: int, policy: str = "smallest") -> int:
    """(sigma_r v_s / v_s) / (sigma_s v_r / v_r), certified to be +-1.

    The cocycle lemma promises the ratio is a sign; anything else is an
    internal error, not a verification failure.
    """
    N = v.level
    tr = sigma_generator(r, N, policy).rep
    ts = sigma_generator(s, N, policy).rep
    vr = v.presentation(tr)
    vs = v.presentation(ts)
    ratio = vs.galois(tr).div(vs).div(vr.galois(ts).div(vr))
    arg = ratio.arg_over_pi()
    if arg == 0 and ratio.is_one():
        return 1
    if arg == 1 and ratio.scale_zeta(N // 2).is_one():
        return -1
    raise ArithmeticError(
        f"alpha({r},{s}) ratio is not a sign; the cocycle property broke")


def _wedge_from_alphas(v: VFamily, candidates: list[int],
                       alpha_of) -> WedgeClass:
    pairs = []
    ordered = sorted(set(candidates), key=_s_key)
    for i, r in enumerate(ordered):
        for s in ordered[i + 1:]:
            if alpha_of(r, s) == -1:
                pairs.append((r, s))
    return WedgeClass(frozenset(pairs))


def d_of_sqrt_prime(ell: int) -> WedgeClass:
    """D(sqrt(l) mod squares); the expected value is e_-1 ^ e_l.

    The v-family lives in {1, i} at level 4l: v_t = i exactly when
    sigma_t flips the square root, which makes the invariant
    sigma_t(sqrt l) = v_t^2 sqrt(l) hold by inspection.
    """
    if not _is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    N = 4 * ell
    root = sqrt_exact(ell)
    pres: dict[int, cp.CycloProduct] = {}
    for t in _units(N):
        moved = galois_act_cyclo(t, root)
        if moved == root:
            pres[t] = cp.CycloProduct.one(N)
        elif moved == -root:
            pres[t] = cp.CycloProduct(N, N // 4, {})
        else:
            raise ArithmeticError("a Galois image of sqrt(l) was not +-sqrt(l)")
    fam = VFamily(N, pres)
    return _wedge_from_alphas(fam, [-1, 2, ell], lambda r, s: alpha(fam, r, s))


def _sin_family(p: int, q: int, policy: str) -> tuple[VFamily, Selector, FormalSum]:
    """Construct and exactly validate the v-family for u = sin a_pq."""
    N = 4 * p * q
    tp = sigma_generator(p, N, policy)
    tq = sigma_generator(q, N, policy)
    H = specialized_selector(p, q, tp.rep, tq.rep)
    a = das_representative(p, q, H)
    twist_a = cp.sin_twist(a, N)
    pres: dict[int, cp.CycloProduct] = {}
    for t in _units(N):
        data = conjugation_data(p, q, H, t)
        # sigma_t(sin a) sin^2(c) = sin a reduces, through the conjugation
        # identity and the reflection sin(pi(1-x)) = sin(pi x), to xi(b)
        # being the explicit root of unity below; test it packed.
        m = (cp.sin_twist(data.b_sigma, N)
             + cp.sin_twist(galois_act(t, a), N)
             - t * twist_a)
        if not cp.xi_presentation(data.b_sigma, N).scale_zeta(m).is_one():
            raise ArithmeticError(
                f"v-family invariant failed at t={t} for ({p},{q})")
        pres[t] = cp.sin_presentation(data.c_sigma, N).pow(-1)
    return VFamily(N, pres), H, a


def d_of_sin_apq(p: int, q: int, policy: str = "smallest") -> WedgeClass:
    """D(sin a_pq mod squares); the Main Formula predicts e_p ^ e_q.

    At level N = 4pq the only generators that can act nontrivially are
    sigma_{-1}, sigma_2, sigma_p, sigma_q, so alpha is computed on that
    support; each alpha comes from exact signs of real presentations,
    alpha_(r,s) = sign(sigma_s sin c_r) / sign(sigma_r sin c_s).
    """
    if not (_is_prime(p) and _is_prime(q) and p < q):
        raise ValueError("need primes p < q")
    N = 4 * p * q
    fam, _H, _a = _sin_family(p, q, policy)

    def sign_alpha(r: int, s: int) -> int:
        tr = sigma_generator(r, N, policy).rep
        ts = sigma_generator(s, N, policy).rep
        # v_t is 1/sin(c_t), so signs of v and of sin(c) coincide
        return (fam.presentation(tr).galois(ts).sign_real()
                * fam.presentation(ts).galois(tr).sign_real())

    return _wedge_from_alphas(fam, [-1, 2, p, q], sign_alpha)


def alpha_odd_combinatorial(p: int, q: int) -> int:
    """alpha_pq for odd p < q by the sign rule alone: no numerics.

    Evaluates (-1)^deg P((1 - sigma_q) c_{sigma_p} - (1 - sigma_p) c_{sigma_q})
    with the specialized selector; that partition is rigged so the
    difference collapses to a single symbol of degree 1, hence -1.
    """
    if p == 2 or not (_is_prime(p) and _is_prime(q) and p < q):
        raise ValueError("need odd primes p < q")
    N = 4 * p * q
    tp = sigma_generator(p, N)
    tq = sigma_generator(q, N)
    H = specialized_selector(p, q, tp.rep, tq.rep)
    c_p = conjugation_data(p, q, H, tp.rep).c_sigma
    c_q = conjugation_data(p, q, H, tq.rep).c_sigma
    diff = (c_p - galois_act(tq.rep, c_p)) - (c_q - galois_act(tp.rep, c_q))
    return -1 if deg(p_projector(diff)) % 2 else 1
