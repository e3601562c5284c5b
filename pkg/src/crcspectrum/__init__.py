"""Exact weight distributions of CRC codes over GF(p^delta).

Computes the dual weight spectrum from one linear recurring sequence per
x-orbit representative instead of enumerating all q^r dual codewords, then
recovers the primal spectrum through the MacWilliams transform. A
brute-force oracle is built in for verification.
"""

from .errors import (
    FieldMismatchError,
    InternalConsistencyError,
    ParseError,
    ResourceLimitError,
)
from .field import GF, FqElement, default_modulus
from .intfactor import integer_factor, is_prime
from .poly import (
    Factorization,
    Poly,
    factorize,
    find_group_generator,
    is_irreducible,
    is_primitive,
    poly_gcd,
    poly_order,
    poly_xgcd,
    pow_mod,
)
from .lfsr import (
    CrcCode,
    LrsState,
    WindowTracker,
    extract_word,
    lrs_next,
    orbit_word_count,
    weight_stream,
)
from .orbits import (
    GAdicForm,
    OrbitRep,
    SylowGenerator,
    XSplit,
    g_adic_digits,
    ring_orbit_reps,
    sylow_decompose,
    sylow_generators,
    unit_group_order,
    unit_orbit_reps,
    x_split,
)
from .crt import CrtBasis, combine_orbit_reps, crt_join, crt_split
from .spectrum import (
    DEFAULT_EXHAUSTIVE_GUARD,
    VerifyReport,
    WeightDistribution,
    brute_force_dual_spectrum,
    dual_spectrum,
    macwilliams,
    min_distance,
    undetected_error_probability,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FqElement",
    "default_modulus",
    "Poly",
    "Factorization",
    "factorize",
    "is_irreducible",
    "is_primitive",
    "poly_gcd",
    "poly_xgcd",
    "poly_order",
    "pow_mod",
    "find_group_generator",
    "integer_factor",
    "is_prime",
    "CrcCode",
    "LrsState",
    "WindowTracker",
    "lrs_next",
    "extract_word",
    "orbit_word_count",
    "weight_stream",
    "GAdicForm",
    "SylowGenerator",
    "OrbitRep",
    "XSplit",
    "g_adic_digits",
    "unit_group_order",
    "sylow_generators",
    "sylow_decompose",
    "x_split",
    "unit_orbit_reps",
    "ring_orbit_reps",
    "CrtBasis",
    "crt_split",
    "crt_join",
    "combine_orbit_reps",
    "WeightDistribution",
    "VerifyReport",
    "dual_spectrum",
    "brute_force_dual_spectrum",
    "macwilliams",
    "min_distance",
    "undetected_error_probability",
    "verify",
    "DEFAULT_EXHAUSTIVE_GUARD",
    "FieldMismatchError",
    "ParseError",
    "ResourceLimitError",
    "InternalConsistencyError",
]
