"""Primitive Pythagorean triples generated from the gap d = c - b."""

from .admissibility import DParams, InadmissibleGap, admissible_ds_up_to, decompose, is_admissible
from .generator import (
    GenConfig,
    GeneratedTriple,
    Order,
    family_first,
    family_second,
    generate_all,
    generate_for_d,
    iter_for_d,
    next_valid_r,
    r_min,
    raw_triple,
    triple_for,
)
from .intarith import U64_MAX, ArithmeticOverflow, divides, gcd, gcd3, isqrt_floor
from .oracle import (
    Kind,
    ScanCapReached,
    TripleVerdict,
    brute_force_by_a,
    brute_force_by_d,
    classify,
    euclid_enumerate,
    is_idpt,
    odd_run_sum,
)
from .primes import PrimeFactorization, exponent_of, factorize, primes_up_to, reconstruct

__version__ = "0.1.0"
