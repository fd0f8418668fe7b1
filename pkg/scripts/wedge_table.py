"""Tabulate the certified wedge classes d(sin a_pq) and d(sqrt(l*)).

Every row is recomputed from scratch through the full pipeline
(selector -> conjugation data -> sign family -> alpha pairings) and
compared against the predicted class, so a clean run of this script
is a readable end-to-end check rather than a pretty-printer.

    python3 scripts/wedge_table.py --max 23
    python3 scripts/wedge_table.py --max 13 --policy second --alpha
"""

from __future__ import annotations

import argparse
import sys
import time

from uod import WedgeClass, alpha_odd_combinatorial, d_of_sin_apq, d_of_sqrt_prime


def primes_through(bound: int) -> list[int]:
    sieve = [True] * (bound + 1)
    out = []
    for n in range(2, bound + 1):
        if sieve[n]:
            out.append(n)
            for m in range(n * n, bound + 1, n):
                sieve[m] = False
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=23, metavar="B",
                    help="largest prime in the table (default 23)")
    ap.add_argument("--policy", default="smallest",
                    choices=("smallest", "second"),
                    help="primitive-root policy for the generator basis")
    ap.add_argument("--alpha", action="store_true",
                    help="also print the combinatorial alpha column "
                         "(odd pairs only)")
    args = ap.parse_args(argv)

    primes = primes_through(args.max)
    bad = 0
    t0 = time.perf_counter()

    print(f"# d(sin a_pq) for p < q <= {args.max}, policy={args.policy}")
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            cls = d_of_sin_apq(p, q, policy=args.policy)
            want = WedgeClass(frozenset({(p, q)}))
            mark = "ok" if cls == want else "MISMATCH"
            bad += cls != want
            row = f"a_{p},{q}: {cls}  [{mark}]"
            if args.alpha and p % 2 == 1:
                row += f"  alpha={alpha_odd_combinatorial(p, q):+d}"
            print(row)

    print(f"# d(sqrt(l*)) for l <= {args.max}")
    for ell in primes:
        cls = d_of_sqrt_prime(ell)
        want = WedgeClass(frozenset({(-1, ell)}))
        mark = "ok" if cls == want else "MISMATCH"
        bad += cls != want
        print(f"sqrt {ell}: {cls}  [{mark}]")

    dt = time.perf_counter() - t0
    print(f"# {bad} mismatches ({dt:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
