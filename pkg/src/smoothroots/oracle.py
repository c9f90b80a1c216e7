"""Randomized factorization oracle, seeded and reproducible.

This lives in its own namespace on purpose: the main pipeline is fully
deterministic, and everything random is quarantined here for tests and
cross-checks only.
"""

import random

from . import fpoly
from .fpoly import (
    constant, ddf, degree, divmod_poly, gcd, mul, normalize, powmod_poly,
    rem, sort_factors, squarefree_decomposition, sub, trim,
)


def cz_oracle(f, p: int, seed: int = 0):
    """Complete factorization of f mod p (p an odd prime) by equal-degree
    splitting driven by a seeded pseudorandom stream.

    Returns canonical [(monic irreducible, multiplicity)]; multiply by the
    leading coefficient of f to rebuild the input.
    """
    f = normalize(f, p)
    if degree(f) < 1:
        raise ValueError("cannot factor a constant polynomial")
    rng = random.Random(seed)
    out = []
    for part, mult in squarefree_decomposition(f, p):
        for e, t in sorted(ddf(part, p).items()):
            for irr in _equal_degree_factor(t, e, p, rng):
                out.append((irr, mult))
    return sort_factors(out)


def _equal_degree_factor(t, e, p, rng):
    if degree(t) == e:
        return [t]
    half = (p**e - 1) // 2
    pieces = [t]
    done = []
    while pieces:
        g = pieces.pop()
        if degree(g) == e:
            done.append(g)
            continue
        u = trim([rng.randrange(p) for _ in range(degree(g))])
        if degree(u) < 1:
            pieces.append(g)
            continue
        d = gcd(g, u, p)
        if 0 < degree(d) < degree(g):
            pieces.append(d)
            pieces.append(divmod_poly(g, d, p)[0])
            continue
        w = sub(powmod_poly(u, half, g, p), constant(1, p), p)
        d = gcd(g, w, p)
        if 0 < degree(d) < degree(g):
            pieces.append(d)
            pieces.append(divmod_poly(g, d, p)[0])
        else:
            pieces.append(g)
    return sorted(done, key=fpoly.poly_key)


def reassemble(factors, leading: int, p: int):
    """Product of (factor, multiplicity) pairs times the leading constant."""
    acc = constant(leading, p)
    for g, m in factors:
        for _ in range(m):
            acc = mul(acc, g, p)
    return acc
