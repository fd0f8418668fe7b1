"""Exact arithmetic of the universal ordinary distribution.

The package is organized in three layers.  The combinatorial layer
(torus, distribution, das) manipulates formal sums of Q/Z-symbols and
the operator calculus acting on them.  The exact-number layer
(cyclotomic, cycloprod, bigreal, galois) provides dense cyclotomic
arithmetic, a packed multiplicative presentation for products of
1 - zeta^j, and certified ball arithmetic for transcendental values.
The pipeline layer (monomials, valuations, dmap) evaluates sine and
gamma monomials, checks valuation identities, and computes the wedge
invariants of square classes.
"""

from .bigreal import BigReal
from .cycloprod import CycloProduct, sin_presentation, xi_presentation
from .cyclotomic import CycloNum, sin_exact, sqrt_exact, xi_exact, zeta
from .das import (
    ConjugationData,
    canonical_apq,
    conjugation_data,
    das_representative,
    first_das_identity_check,
    second_das_identity_check,
    torsion_witness_check,
)
from .distribution import (
    FormalSum,
    Selector,
    canonical_selector,
    deg,
    galois_act,
    lift,
    p_projector,
    parse_formal_sum,
    seeded_selector,
    theta_op,
    y_op,
)
from .dmap import (
    WedgeClass,
    alpha_odd_combinatorial,
    d_of_sin_apq,
    d_of_sqrt_prime,
)
from .galois import GaloisElement, e_cocycle, legendre, sigma_generator
from .monomials import (
    Inconclusive,
    gamma_eval,
    gamma_sine_factorization_check,
    sign_rule,
    sin_eval,
)
from .torus import TorusPoint, make_point
from .valuations import seo_check, v_at

__all__ = [
    "BigReal",
    "ConjugationData",
    "CycloNum",
    "CycloProduct",
    "FormalSum",
    "GaloisElement",
    "Inconclusive",
    "Selector",
    "TorusPoint",
    "WedgeClass",
    "alpha_odd_combinatorial",
    "canonical_apq",
    "canonical_selector",
    "conjugation_data",
    "d_of_sin_apq",
    "d_of_sqrt_prime",
    "das_representative",
    "deg",
    "e_cocycle",
    "first_das_identity_check",
    "galois_act",
    "gamma_eval",
    "gamma_sine_factorization_check",
    "legendre",
    "lift",
    "make_point",
    "p_projector",
    "parse_formal_sum",
    "second_das_identity_check",
    "seeded_selector",
    "seo_check",
    "sigma_generator",
    "sign_rule",
    "sin_eval",
    "sin_exact",
    "sin_presentation",
    "sqrt_exact",
    "theta_op",
    "torsion_witness_check",
    "v_at",
    "xi_exact",
    "xi_presentation",
    "y_op",
    "zeta",
]
