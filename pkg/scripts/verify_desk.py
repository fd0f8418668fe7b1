"""One-stop exact verification sweep, with per-section timings.

Runs every theorem-level check the library exposes over configurable
prime ranges and prints a section-by-section report: the two Das
identities (canonical plus seeded selectors), the 2-torsion witness,
the conjugation identity sigma_t(sin a) sin^2(c) = sin a at every
unit t, the valuation-Legendre identity, and the certified Gamma
monomial factorization.  Exit status 0 means every check passed.

    python3 scripts/verify_desk.py
    python3 scripts/verify_desk.py --max 19 --conj-max 13 --seeds 5
"""

from __future__ import annotations

import argparse
import sys
import time
from math import gcd

from uod import (
    canonical_selector,
    conjugation_data,
    das_representative,
    first_das_identity_check,
    gamma_sine_factorization_check,
    second_das_identity_check,
    seeded_selector,
    seo_check,
    sin_presentation,
    torsion_witness_check,
)


def primes_through(bound: int) -> list[int]:
    sieve = [True] * (bound + 1)
    out = []
    for n in range(2, bound + 1):
        if sieve[n]:
            out.append(n)
            for m in range(n * n, bound + 1, n):
                sieve[m] = False
    return out


def pairs_through(bound: int) -> list[tuple[int, int]]:
    ps = primes_through(bound)
    return [(p, q) for i, p in enumerate(ps) for q in ps[i + 1:]]


class Section:
    """Timed block that counts failures and prints one summary line."""

    def __init__(self, title: str):
        self.title = title
        self.failures: list[str] = []
        self.count = 0

    def check(self, ok: bool, label: str) -> None:
        self.count += 1
        if not ok:
            self.failures.append(label)

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is not None:
            return False
        dt = time.perf_counter() - self._t0
        if self.failures:
            shown = ", ".join(self.failures[:5])
            print(f"{self.title}: {len(self.failures)}/{self.count} FAILED "
                  f"({shown}) ({dt:.1f}s)")
        else:
            print(f"{self.title}: {self.count} checks ok ({dt:.1f}s)")
        return False


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=23, metavar="B",
                    help="largest prime for the identity sweeps (default 23)")
    ap.add_argument("--conj-max", type=int, default=13, metavar="B",
                    help="largest prime for the per-unit conjugation sweep "
                         "(default 13; cost grows like phi(4pq))")
    ap.add_argument("--gamma-max", type=int, default=13, metavar="B",
                    help="largest prime for the Gamma factorization (default 13)")
    ap.add_argument("--seo-max", type=int, default=200, metavar="B",
                    help="largest odd prime for the valuation identity "
                         "(default 200)")
    ap.add_argument("--seeds", type=int, default=10,
                    help="number of seeded selectors per pair (default 10)")
    ap.add_argument("--prec", type=int, default=256,
                    help="working precision in bits (default 256)")
    args = ap.parse_args(argv)

    sections: list[Section] = []
    canonical = canonical_selector()

    with Section("das identities") as sec:
        sections.append(sec)
        for p, q in pairs_through(args.max):
            sec.check(first_das_identity_check(p, q, canonical),
                      f"first({p},{q})")
            for seed in range(args.seeds):
                H = seeded_selector(seed)
                sec.check(first_das_identity_check(p, q, H),
                          f"first({p},{q})#{seed}")
                sec.check(second_das_identity_check(p, q, canonical, H),
                          f"second({p},{q})#{seed}")

    with Section("torsion witnesses") as sec:
        sections.append(sec)
        for p, q in pairs_through(args.max):
            sec.check(torsion_witness_check(p, q), f"({p},{q})")

    with Section("conjugation exactness") as sec:
        sections.append(sec)
        for p, q in pairs_through(args.conj_max):
            N = 4 * p * q
            sin_a = sin_presentation(das_representative(p, q, canonical), N)
            for t in range(1, N):
                if gcd(t, N) != 1:
                    continue
                c = conjugation_data(p, q, canonical, t).c_sigma
                sin_c = sin_presentation(c, N)
                sec.check(sin_a.galois(t).mul(sin_c).mul(sin_c).equals(sin_a),
                          f"({p},{q})@{t}")

    with Section("valuation-Legendre identity") as sec:
        sections.append(sec)
        odd = [r for r in primes_through(args.seo_max) if r % 2 == 1]
        for i, p in enumerate(odd):
            for q in odd[i + 1:]:
                sec.check(seo_check(p, q), f"({p},{q})")

    with Section("gamma factorization") as sec:
        sections.append(sec)
        for p, q in pairs_through(args.gamma_max):
            sec.check(gamma_sine_factorization_check(p, q, args.prec),
                      f"({p},{q})")

    bad = sum(len(sec.failures) for sec in sections)
    print(f"overall: {'ok' if bad == 0 else f'{bad} failures'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
