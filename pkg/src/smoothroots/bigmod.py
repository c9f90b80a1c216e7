"""Exact integer and modular arithmetic shared by every other module.

All values are plain Python ints (arbitrary precision, exact).  Residues
are always returned in [0, modulus).  External formats serialize integers
as decimal strings; nothing here ever goes through floating point.
"""

from dataclasses import dataclass
import math

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10^24,
# in particular for every n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

DETERMINISTIC_PRIME_BOUND = 1 << 64


@dataclass(frozen=True)
class ModCtx:
    """Fixed modulus >= 2; residues produced under it lie in [0, modulus)."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")


def _modulus_of(ctx) -> int:
    return ctx.modulus if isinstance(ctx, ModCtx) else int(ctx)


def powmod(base: int, exponent: int, ctx) -> int:
    """base**exponent reduced into [0, modulus); square-and-multiply."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exponent, _modulus_of(ctx))


def invmod(a: int, ctx) -> int:
    """Inverse of a modulo the context modulus.

    Raises ValueError carrying gcd information when a is not invertible:
    a failed inversion modulo a composite is a useful event elsewhere,
    so it is reported, never silently absorbed.
    """
    m = _modulus_of(ctx)
    g, u, _ = egcd(a, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m} (gcd={g})")
    return u % m


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(|a|, |b|) and u*a + v*b = g."""
    if a == 0 and b == 0:
        raise ValueError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def crt_idempotent(mod_a: int, mod_b: int) -> int:
    """The unique m in [0, mod_a*mod_b) with m = 1 (mod mod_a), m = 0 (mod mod_b).

    Requires gcd(mod_a, mod_b) = 1.  Raising an element of a group whose
    order divides mod_a*mod_b to this power projects onto the mod_a part.
    """
    if mod_a < 1 or mod_b < 1:
        raise ValueError("moduli must be positive")
    if mod_a == 1:
        return 0
    g, u, _ = egcd(mod_b, mod_a)
    if g != 1:
        raise ValueError(f"moduli not coprime: gcd({mod_a}, {mod_b}) = {g}")
    # u * mod_b = 1 (mod mod_a); multiply by mod_b to kill the other side
    return (u % mod_a) * mod_b


def is_prime(n: int) -> bool:
    """Primality test: exact for n < 2**64 (deterministic witness set).

    Above 2**64 the same fixed witnesses make this a strong probable-prime
    test; the result is advisory there and the pipeline treats primality
    of its inputs as a caller obligation.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, by integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("iroot expects n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x


def perfect_power_root(a: int, k: int):
    """Return b with b**k == a if such an integer exists, else None."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return a
    if a == 0:
        return 0
    if a < 0:
        if k % 2 == 0:
            return None
        b = perfect_power_root(-a, k)
        return None if b is None else -b
    r = iroot(a, k)
    return r if r**k == a else None
