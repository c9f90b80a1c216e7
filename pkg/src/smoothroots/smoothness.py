"""Smooth parts of p-1: Pollard-Strassen prime extraction below a bound,
exact smooth-part computation, and the least prime bound whose smooth part
clears a threshold exponent.

All threshold comparisons are exact integer comparisons; nothing here uses
floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd, isqrt

from .bigmod import is_prime

# Below this bound the integer block products are N-independent and small
# enough to memoize once per bound; above it the trees run modulo N.
_CACHE_MAX_B = 1 << 18

_block_cache: dict[int, tuple[int, list[int], list[list[int]]]] = {}
_sieve_cache: dict[int, bytearray] = {}


def _sieve(limit: int) -> bytearray:
    """Byte table of primality flags for 0..limit."""
    if limit in _sieve_cache:
        return _sieve_cache[limit]
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    _sieve_cache[limit] = flags
    return flags


def _int_product(values: list[int]) -> int:
    """Balanced product tree over plain integers."""
    if not values:
        return 1
    layer = list(values)
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _cached_blocks(bound: int):
    """Per-bound memo: block size c, integer block products, and the primes
    inside each block.  Block j covers (j*c, j*c + c]."""
    hit = _block_cache.get(bound)
    if hit is not None:
        return hit
    c = isqrt(bound - 1) + 1
    nb = -(-bound // c)
    flags = _sieve(nb * c)
    products = []
    primes = []
    for j in range(nb):
        lo = j * c
        products.append(_int_product(list(range(lo + 1, lo + c + 1))))
        primes.append([m for m in range(max(lo + 1, 2), min(lo + c, bound) + 1) if flags[m]])
    entry = (c, products, primes)
    _block_cache[bound] = entry
    return entry


def _poly_mul_mod(a, b, n):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [c % n for c in out]


def _product_tree(leaves, n):
    """Bottom-up product tree of polynomials mod n; tree[0] is the leaf
    layer and tree[-1] holds the full product."""
    tree = [leaves]
    while len(tree[-1]) > 1:
        layer = tree[-1]
        nxt = [_poly_mul_mod(layer[i], layer[i + 1], n) for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        tree.append(nxt)
    return tree


def _poly_rem(a, b, n):
    # b need not be monic here, but every divisor we build is
    r = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % n
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return [c % n for c in r[:db]]


def _remainder_tree(f, tree, n):
    """Evaluate f at every leaf point by descending remainders down the
    point product tree; returns one value per leaf."""
    layers = list(reversed(tree))  # root first
    rems = [f if len(f) >= len(layers[0][0]) else f]
    rems = [_poly_rem(f, layers[0][0], n) if len(f) > len(layers[0][0]) - 1 else list(f)]
    for depth in range(1, len(layers)):
        layer = layers[depth]
        parent_layer = layers[depth - 1]
        nxt = []
        child = 0
        for parent_idx in range(len(parent_layer)):
            kids = []
            if child < len(layer):
                kids.append(layer[child])
                child += 1
            # a parent with an odd tail passed one child through unchanged
            if child < len(layer) and len(kids[0]) - 1 + len(layer[child]) - 1 == len(parent_layer[parent_idx]) - 1:
                kids.append(layer[child])
                child += 1
            for kid in kids:
                nxt.append(_poly_rem(rems[parent_idx], kid, n))
        rems = nxt
    return [r[0] if r else 0 for r in rems]


def _block_values_mod(n, c, nb):
    """Pollard-Strassen core mod n: F(x) = (x+1)...(x+c) via a product
    tree, then F at 0, c, 2c, ... via the remainder tree over the point
    tree; value j is the product of block j's integers mod n."""
    leaves = [[i % n, 1] for i in range(1, c + 1)]
    f = _product_tree(leaves, n)[-1]
    point_leaves = [[(-(j * c)) % n, 1] for j in range(nb)]
    point_tree = _product_tree(point_leaves, n)
    return _remainder_tree(f, point_tree, n)


def pollard_strassen_primes(n: int, bound: int, use_cache: bool = True) -> list[int]:
    """Exactly the primes <= bound dividing n, by Pollard-Strassen blocks.

    Block size is c = ceil(sqrt(bound)); the product of each block of c
    consecutive integers is taken modulo n, a gcd flags blocks sharing a
    factor with n, and only flagged blocks are scanned.  For small bounds
    the integer block products do not depend on n and are memoized once
    per bound; the general path runs the product and remainder trees mod n.
    """
    if n < 2 or bound < 2:
        raise ValueError("pollard_strassen_primes expects n >= 2, bound >= 2")
    b_eff = min(bound, n)
    found = []
    if use_cache and b_eff <= _CACHE_MAX_B:
        c, products, primes_in_block = _cached_blocks(b_eff)
        for j, prod in enumerate(products):
            if int_gcd(prod % n, n) > 1:
                for m in primes_in_block[j]:
                    if n % m == 0:
                        found.append(m)
        return found
    c = isqrt(b_eff - 1) + 1
    nb = -(-b_eff // c)
    values = _block_values_mod(n, c, nb)
    flags = _sieve(nb * c)
    for j, v in enumerate(values):
        if int_gcd(v, n) > 1:
            lo = j * c
            for m in range(max(lo + 1, 2), min(lo + c, b_eff) + 1):
                if flags[m] and n % m == 0:
                    found.append(m)
    return found


def smooth_part(n: int, bound: int) -> tuple[int, list[tuple[int, int]]]:
    """Largest divisor of n made of primes <= bound, with the exact
    multiplicity of each such prime."""
    if n < 1 or bound < 2:
        raise ValueError("smooth_part expects n >= 1, bound >= 2")
    if n == 1:
        return 1, []
    factors = []
    s = 1
    for q in pollard_strassen_primes(n, bound):
        v = 0
        while n % q == 0:
            n //= q
            v += 1
        factors.append((q, v))
        s *= q**v
    return s, factors


@dataclass(frozen=True)
class SmoothnessProfile:
    """The smooth-part data the splitting pipeline runs on: the least prime
    bound q whose q-smooth part S of p-1 reaches (p-1)**(tau+delta)."""

    p: int
    q: int
    S: int
    factors: tuple[tuple[int, int], ...]
    tau: Fraction
    delta: Fraction

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "q": str(self.q),
            "S": str(self.S),
            "factors": [[str(l), v] for l, v in self.factors],
            "tau": str(self.tau),
            "delta": str(self.delta),
        }


def _meets_threshold(s: int, n: int, exponent: Fraction) -> bool:
    # s >= n**(num/den), exactly: s**den >= n**num
    return s ** exponent.denominator >= n ** exponent.numerator


def least_prime_bound(p: int, tau, delta) -> SmoothnessProfile:
    """Least prime q whose q-smooth part S of p-1 satisfies
    S >= (p-1)**(tau+delta), established by exact integer powering.

    Primes of p-1 are collected under an escalating Pollard-Strassen bound
    and consumed in increasing order; any prime not dividing p-1 can never
    be the least achiever, so candidates come from p-1 itself.
    """
    tau = Fraction(tau)
    delta = Fraction(delta)
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if delta <= 0:
        raise ValueError("delta must be positive")
    exponent = tau + delta
    if not 0 < exponent <= 1:
        raise ValueError("tau + delta must lie in (0, 1]")
    n = p - 1
    remaining = n
    known: dict[int, int] = {}
    bound = 64
    while True:
        if remaining > 1:
            for q in pollard_strassen_primes(remaining, min(bound, remaining)):
                v = 0
                while remaining % q == 0:
                    remaining //= q
                    v += 1
                known[q] = v
            if remaining > 1 and isqrt(remaining) < bound:
                # no factor <= sqrt(remaining): the cofactor is prime
                known[remaining] = known.get(remaining, 0) + 1
                remaining = 1
        s = 1
        for q in sorted(known):
            s *= q ** known[q]
            if _meets_threshold(s, n, exponent):
                factors = tuple((l, known[l]) for l in sorted(known) if l <= q)
                return SmoothnessProfile(p=p, q=q, S=s, factors=factors,
                                         tau=tau, delta=delta)
        if remaining == 1:
            raise AssertionError("threshold unreachable: tau + delta <= 1 guarantees S = p-1 works")
        bound *= 64


def full_factorization(n: int) -> list[tuple[int, int]]:
    """Exact prime factorization, escalating the Pollard-Strassen bound
    until the unfactored cofactor is itself prime.  Intended for the
    moderate n where callers need all of p-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, int] = {}
    remaining = n
    bound = 64
    while remaining > 1:
        if is_prime(remaining):
            out[remaining] = out.get(remaining, 0) + 1
            break
        for q in pollard_strassen_primes(remaining, min(bound, remaining)):
            v = 0
            while remaining % q == 0:
                remaining //= q
                v += 1
            out[q] = out.get(q, 0) + v
        if remaining > 1 and isqrt(remaining) < bound:
            out[remaining] = out.get(remaining, 0) + 1
            break
        bound *= 64
    return sorted(out.items())
