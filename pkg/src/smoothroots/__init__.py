"""smoothroots: deterministic factorization of a prefixed integer polynomial
modulo p, and n-th root extraction modulo p, exploiting a large smooth
divisor of p-1."""

__version__ = "0.1.0"

from .bigmod import egcd, crt_idempotent, is_prime, perfect_power_root, powmod
from .smoothness import SmoothnessProfile, least_prime_bound, pollard_strassen_primes, smooth_part
from .numberfield import (
    FieldDescriptor,
    load_descriptor,
    monicize,
    quadratic_descriptor,
    validate_descriptor,
)
from .splitter import CyclicExhausted, FactorizationResult, SplitParams, factor_fixed
from .roots import RootsResult, capelli_irreducible, nth_roots

__all__ = [
    "egcd", "crt_idempotent", "is_prime", "perfect_power_root", "powmod",
    "SmoothnessProfile", "least_prime_bound", "pollard_strassen_primes", "smooth_part",
    "FieldDescriptor", "load_descriptor", "monicize", "quadratic_descriptor",
    "validate_descriptor",
    "CyclicExhausted", "FactorizationResult", "SplitParams", "factor_fixed",
    "RootsResult", "capelli_irreducible", "nth_roots",
]
