"""Command-line verification surface.

Every subcommand produces a stream of per-case reports.  Computational
commands (das-class, eval, act) print the computed value; verification
commands print one line per case and a summary line.  With --json a
single object is emitted instead:

    {"schema": 1, "command": ..., "outcome": ...,
     "cases": [{"input": ..., "outcome": ..., "certificate": ...}],
     "elapsed_ms": ...}

Exit codes: 0 all cases pass, 1 some case failed, 2 usage or parse
error, 3 verification hit its precision ceiling without a verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import lcm
from typing import Iterator, NamedTuple

from . import bigreal, cyclotomic, das, distribution, dmap, monomials, valuations
from .galois import legendre

SCHEMA_VERSION = 1
DEFAULT_PREC = 256
DEFAULT_SEEDS = 10
DEFAULT_SEO_MAX = 200


class Case(NamedTuple):
    input: str
    outcome: str
    certificate: str


def _primes_through(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\0\0"
    for n in range(2, int(bound**0.5) + 1):
        if sieve[n]:
            sieve[n * n :: n] = b"\0" * len(sieve[n * n :: n])
    return [n for n in range(bound + 1) if sieve[n]]


def _cmd_das_class(args: argparse.Namespace) -> Iterator[Case]:
    if args.operator_form:
        s = das.das_representative(args.p, args.q, distribution.canonical_selector())
    else:
        s = das.canonical_apq(args.p, args.q)
    yield Case(f"{args.p} {args.q}", "pass", distribution.format_formal_sum(s))


def _cmd_verify_identities(args: argparse.Namespace) -> Iterator[Case]:
    p, q = args.p, args.q
    canonical = distribution.canonical_selector()
    ok = das.first_das_identity_check(p, q, canonical)
    yield Case(
        f"{p} {q} canonical",
        "pass" if ok else "fail",
        "first identity" if ok else "first identity violated",
    )
    for k in range(args.seeds):
        seeded = distribution.seeded_selector(k)
        first = das.first_das_identity_check(p, q, seeded)
        second = das.second_das_identity_check(p, q, canonical, seeded)
        ok = first and second
        detail = []
        if not first:
            detail.append("first identity violated")
        if not second:
            detail.append("second identity violated")
        yield Case(
            f"{p} {q} seed {k}",
            "pass" if ok else "fail",
            "first and second identities" if ok else "; ".join(detail),
        )


def _cmd_verify_torsion(args: argparse.Namespace) -> Iterator[Case]:
    ok = das.torsion_witness_check(args.p, args.q)
    yield Case(
        f"{args.p} {args.q}",
        "pass" if ok else "fail",
        "2 a_pq realized in Y_p A + Y_q A + (1 + sigma_-1) A"
        if ok
        else "witness identity violated",
    )


def _cmd_verify_main(args: argparse.Namespace) -> Iterator[Case]:
    expected = dmap.WedgeClass(frozenset({(args.p, args.q)}))
    try:
        got = dmap.d_of_sin_apq(args.p, args.q)
    except (ArithmeticError, RuntimeError) as exc:
        yield Case(f"{args.p} {args.q}", "fail", str(exc))
        return
    ok = got == expected
    yield Case(
        f"{args.p} {args.q}",
        "pass" if ok else "fail",
        str(got) if ok else f"computed {got}, expected {expected}",
    )


def _cmd_verify_auxiliary(args: argparse.Namespace) -> Iterator[Case]:
    expected = dmap.WedgeClass(frozenset({(-1, args.l)}))
    try:
        got = dmap.d_of_sqrt_prime(args.l)
    except (ArithmeticError, RuntimeError) as exc:
        yield Case(str(args.l), "fail", str(exc))
        return
    ok = got == expected
    yield Case(
        str(args.l),
        "pass" if ok else "fail",
        str(got) if ok else f"computed {got}, expected {expected}",
    )


def _cmd_verify_seo(args: argparse.Namespace) -> Iterator[Case]:
    if args.p is not None:
        pairs = [(args.p, args.q)]
    else:
        odd = [n for n in _primes_through(args.max) if n > 2]
        pairs = [(p, q) for i, p in enumerate(odd) for q in odd[i + 1 :]]
    for p, q in pairs:
        ok = valuations.seo_check(p, q)
        yield Case(
            f"{p} {q}",
            "pass" if ok else "fail",
            f"(p|q) = {legendre(p, q)}, (q|p) = {legendre(q, p)}",
        )


def _cmd_verify_gamma(args: argparse.Namespace) -> Iterator[Case]:
    try:
        ok = monomials.gamma_sine_factorization_check(args.p, args.q, args.prec)
    except monomials.Inconclusive as exc:
        yield Case(f"{args.p} {args.q}", "inconclusive", str(exc))
        return
    yield Case(
        f"{args.p} {args.q}",
        "pass" if ok else "fail",
        f"|Gamma(a_pq)/sqrt(sin a_pq) - constant| certified below 2^-{args.prec // 2}"
        if ok
        else "difference certified above tolerance",
    )


def _format_complex(re: bigreal.BigReal, im: bigreal.BigReal, exact_real: bool) -> str:
    re_s = bigreal.to_decimal_string(re)
    if exact_real:
        return re_s
    im_s = bigreal.to_decimal_string(im)
    if im_s.startswith("-"):
        return f"{re_s} - {im_s[1:]}*i"
    return f"{re_s} + {im_s}*i"


def _cmd_eval(args: argparse.Namespace) -> Iterator[Case]:
    s = distribution.parse_formal_sum(args.sum)
    if args.fn == "sin":
        value = bigreal.to_decimal_string(monomials.sin_eval(s, args.prec))
    elif args.fn == "gamma":
        value = bigreal.to_decimal_string(monomials.gamma_eval(s, args.prec))
    else:
        level = lcm(*(a.den for a, _ in s.items())) if s else 1
        z = cyclotomic.xi_exact(s, level)
        re, im = cyclotomic.complex_ball(z, args.prec)
        value = _format_complex(re, im, cyclotomic.is_real(z))
    yield Case(args.sum, "pass", value)


def _cmd_act(args: argparse.Namespace) -> Iterator[Case]:
    s = distribution.parse_formal_sum(args.sum)
    moved = distribution.galois_act(args.t, s)
    yield Case(
        f"{args.t} {args.sum}", "pass", distribution.format_formal_sum(moved)
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uod",
        description="exact checks for distribution classes and their invariants",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    dc = sub.add_parser("das-class", help="print the class a_pq as a formal sum")
    dc.add_argument("p", type=int)
    dc.add_argument("q", type=int)
    form = dc.add_mutually_exclusive_group()
    form.add_argument("--operator-form", action="store_true")
    form.add_argument("--closed-form", action="store_true")
    dc.set_defaults(handler=_cmd_das_class, bare=True)

    ver = sub.add_parser("verify", help="run a verification suite")
    vsub = ver.add_subparsers(dest="check", required=True)

    vi = vsub.add_parser("identities", help="first and second Das identities")
    vi.add_argument("p", type=int)
    vi.add_argument("q", type=int)
    vi.add_argument("--seeds", type=int, default=DEFAULT_SEEDS)
    vi.set_defaults(handler=_cmd_verify_identities, bare=False)

    vt = vsub.add_parser("torsion", help="2-torsion witness for a_pq")
    vt.add_argument("p", type=int)
    vt.add_argument("q", type=int)
    vt.set_defaults(handler=_cmd_verify_torsion, bare=False)

    vm = vsub.add_parser("main-formula", help="wedge invariant of sin a_pq")
    vm.add_argument("p", type=int)
    vm.add_argument("q", type=int)
    vm.set_defaults(handler=_cmd_verify_main, bare=False)

    va = vsub.add_parser("auxiliary", help="wedge invariant of sqrt(l)")
    va.add_argument("l", type=int)
    va.set_defaults(handler=_cmd_verify_auxiliary, bare=False)

    vs = vsub.add_parser("seo", help="valuation-Legendre identity")
    vs.add_argument("p", type=int, nargs="?")
    vs.add_argument("q", type=int, nargs="?")
    vs.add_argument("--max", type=int, default=DEFAULT_SEO_MAX)
    vs.set_defaults(handler=_cmd_verify_seo, bare=False)

    vg = vsub.add_parser("gamma", help="Gamma monomial factorization")
    vg.add_argument("p", type=int)
    vg.add_argument("q", type=int)
    vg.add_argument("--prec", type=int, default=DEFAULT_PREC)
    vg.set_defaults(handler=_cmd_verify_gamma, bare=False)

    ev = sub.add_parser("eval", help="certified numeric value of a monomial")
    ev.add_argument("fn", choices=["sin", "gamma", "xi"])
    ev.add_argument("sum", help='formal sum, e.g. "[1/3] + 2*[1/5]"')
    ev.add_argument("--prec", type=int, default=DEFAULT_PREC)
    ev.set_defaults(handler=_cmd_eval, bare=True)

    ac = sub.add_parser("act", help="apply sigma_t to a formal sum")
    ac.add_argument("t", type=int)
    ac.add_argument("sum")
    ac.set_defaults(handler=_cmd_act, bare=True)

    # accept --json after the subcommand too; SUPPRESS keeps the leaf
    # parser from clobbering a --json given before it
    for leaf in (dc, vi, vt, vm, va, vs, vg, ev, ac):
        leaf.add_argument("--json", action="store_true",
                          default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.check == "seo":
        if (args.p is None) != (args.q is None):
            parser.error("seo takes either a pair p q or --max alone")

    start = time.monotonic()
    cases: list[Case] = []
    try:
        for case in args.handler(args):
            cases.append(case)
            if not args.json:
                if args.bare:
                    print(case.certificate)
                else:
                    print(f"{case.input}: {case.outcome}  [{case.certificate}]")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = int((time.monotonic() - start) * 1000)

    outcomes = {c.outcome for c in cases}
    overall = (
        "fail"
        if "fail" in outcomes
        else "inconclusive"
        if "inconclusive" in outcomes
        else "pass"
    )
    if args.json:
        report = {
            "schema": SCHEMA_VERSION,
            "command": " ".join(sys.argv[1:] if argv is None else argv),
            "outcome": overall,
            "cases": [c._asdict() for c in cases],
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(report))
    elif not args.bare:
        tally = f"{sum(c.outcome == 'pass' for c in cases)}/{len(cases)} pass"
        print(f"{overall}: {tally} ({elapsed_ms} ms)")

    return {"pass": 0, "fail": 1, "inconclusive": 3}[overall]


if __name__ == "__main__":
    sys.exit(main())
