"""n-th roots of an integer modulo p through the fixed-polynomial pipeline:
the full factorization of X^n - a collects every root, and for odd prime n
a single nontrivial factor already determines one root, the rest following
from a primitive root of unity.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .bigmod import invmod, is_prime, perfect_power_root, powmod
from .fpoly import degree, divmod_poly, normalize, rem
from .numberfield import DescriptorError, FieldDescriptor
from .smoothness import full_factorization, least_prime_bound
from .splitter import (
    SplitParams, berlekamp_complete, factor_fixed, nonresidue_search_cap,
    split_factor,
)


class CapelliError(ValueError):
    """X^n - a is reducible over the rationals; names the violated
    irreducibility condition."""


@dataclass
class RootsResult:
    p: int
    a: int
    n: int
    roots: list[int]
    method: str        # full_factorization | single_root_fast_path | expanded_via_unity_root
    zeta_source: str   # from_factorization | search | none

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "a": str(self.a),
            "n": self.n,
            "roots": [str(r) for r in self.roots],
            "method": self.method,
            "zeta_source": self.zeta_source,
        }


def capelli_irreducible(a: int, n: int) -> bool:
    """Classical irreducibility criterion for X^n - a over the rationals:
    a must not be an l-th power for any prime l dividing n, and when 4
    divides n, -4a must not be a fourth power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a in (0, 1, -1):
        raise ValueError("a must differ from 0, 1, -1")
    for ell, _ in full_factorization(n):
        if perfect_power_root(a, ell) is not None:
            return False
    if n % 4 == 0 and perfect_power_root(-4 * a, 4) is not None:
        return False
    return True


def _capelli_or_raise(a: int, n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if a in (0, 1, -1):
        raise CapelliError(f"a={a} is excluded (0 and units are always powers)")
    for ell, _ in full_factorization(n):
        b = perfect_power_root(a, ell)
        if b is not None:
            raise CapelliError(f"a={a} is a {ell}-th power ({b}^{ell}); "
                               f"X^{n}-{a} is reducible")
    if n % 4 == 0:
        b = perfect_power_root(-4 * a, 4)
        if b is not None:
            raise CapelliError(f"-4a={-4 * a} is a fourth power ({b}^4); "
                               f"X^{n}-{a} is reducible")


def _power_poly(a: int, n: int) -> list[int]:
    return [-a] + [0] * (n - 1) + [1]


def root_from_factor(g, s: int, a: int, p: int) -> int:
    """One s-th root of a mod p from any nontrivial monic divisor g of
    X^s - a (s an odd prime dividing p-1): the product of g's roots is a
    power combination c0^u * a^(-w) that collapses to a single root once
    deg(g)*u - s*w = 1."""
    d = degree(g)
    if not (0 < d < s):
        raise ValueError("divisor degree must be strictly between 0 and s")
    if s < 3 or not is_prime(s) or (p - 1) % s:
        raise ValueError("s must be an odd prime dividing p-1")
    if rem(normalize(_power_poly(a, s), p), g, p):
        raise ValueError("g does not divide X^s - a mod p")
    a_mod = a % p
    c0 = (g[0] if d % 2 == 0 else -g[0]) % p
    u = invmod(d % s, s)
    w = (d * u - 1) // s
    candidate = powmod(c0, u, p) * invmod(powmod(a_mod, w, p), p) % p
    if powmod(candidate, s, p) == a_mod:
        return candidate
    candidate = (p - candidate) % p
    if powmod(candidate, s, p) == a_mod:
        return candidate
    raise ValueError("candidate verification failed: g is not a divisor profile of X^s - a")


def all_roots_from_one(r: int, s: int, p: int, a: int, mode: str = "search",
                       second_root: int | None = None, cap: int | None = None) -> list[int]:
    """All s-th roots of a mod p from one verified root r, for prime s
    dividing p-1.  A primitive s-th root of unity comes either from the
    ratio of two distinct known roots, or from a deterministic scan
    b = 2, 3, ... for an s-th power nonresidue (capped, not provably
    polynomial)."""
    a_mod = a % p
    r %= p
    if powmod(r, s, p) != a_mod:
        raise ValueError("r is not an s-th root of a")
    if (p - 1) % s:
        raise ValueError("s must divide p-1")
    if s == 2:
        return sorted({r, (p - r) % p})
    if mode == "from_factorization":
        if second_root is None or second_root % p == r:
            raise ValueError("from_factorization mode needs a second distinct root")
        if powmod(second_root, s, p) != a_mod:
            raise ValueError("second root fails verification")
        zeta = second_root * invmod(r, p) % p
    elif mode == "search":
        if cap is None:
            cap = nonresidue_search_cap(p)
        zeta = None
        exp = (p - 1) // s
        for b in range(2, cap + 1):
            z = powmod(b, exp, p)
            if z != 1:
                zeta = z
                break
        if zeta is None:
            raise ValueError(f"no s-th power nonresidue found below the cap {cap}")
    else:
        raise ValueError(f"unknown zeta mode {mode!r}")
    roots = []
    cur = r
    for _ in range(s):
        roots.append(cur)
        cur = cur * zeta % p
    return sorted(set(roots))


def _roots_of_linear_factors(factors, p: int) -> list[int]:
    out = []
    for poly, _mult in factors:
        if degree(poly) == 1:
            out.append((-poly[0]) % p)
    return sorted(set(out))


def _collect_two_roots(g, e, desc, profile, params, p):
    """Split pieces of X^s - a until two linear factors surface."""
    roots = []
    pieces = [g]
    while pieces and len(roots) < 2:
        piece = pieces.pop()
        if degree(piece) == 1:
            roots.append((-piece[0]) % p)
            continue
        if p <= params.small_prime_cutoff:
            for irr, _ in berlekamp_complete(piece, p, cutoff=params.small_prime_cutoff):
                pieces.append(irr)
        else:
            divisor = split_factor(piece, e, desc, profile, params)
            pieces.append(divisor)
            pieces.append(divmod_poly(piece, divisor, p)[0])
    return roots


def nth_roots(a: int, n: int, p: int, desc: FieldDescriptor,
              params: SplitParams | None = None, fast_path: bool = False,
              zeta_mode: str = "search") -> RootsResult:
    """All n-th roots of a modulo p, for X^n - a irreducible over the
    rationals (rejected otherwise, naming the violated condition).

    The default route factors X^n - a mod p completely and reads the roots
    off the linear factors; an empty list reports a nonresidue, not an
    error.  With fast_path and n an odd prime, one split plus a root of
    unity replaces the full factorization."""
    if params is None:
        params = SplitParams()
    _capelli_or_raise(a, n)
    if list(desc.f) != _power_poly(a, n):
        raise DescriptorError(f"descriptor is not for X^{n} - {a}")
    if p < 3 or p % 2 == 0 or (p < (1 << 64) and not is_prime(p)):
        raise ValueError("p must be an odd prime")
    if a % p == 0:
        raise ValueError("p must not divide a")
    a_mod = a % p

    if fast_path and n >= 3 and is_prime(n):
        if (p - 1) % n:
            # prime to the group order: the unique root is a direct power
            root = powmod(a_mod, invmod(n, p - 1), p)
            assert powmod(root, n, p) == a_mod
            return RootsResult(p=p, a=a, n=n, roots=[root],
                               method="single_root_fast_path", zeta_source="none")
        if powmod(a_mod, (p - 1) // n, p) != 1:
            return RootsResult(p=p, a=a, n=n, roots=[],
                               method="single_root_fast_path", zeta_source="none")
        fast_params = replace(params, tau=Fraction(1, n))
        g = normalize(_power_poly(a, n), p)
        if p <= fast_params.small_prime_cutoff:
            factors = berlekamp_complete(g, p, cutoff=fast_params.small_prime_cutoff)
            divisor = factors[0][0]
            profile = None
        else:
            profile = least_prime_bound(p, fast_params.tau, fast_params.delta)
            divisor = split_factor(g, 1, desc, profile, fast_params)
        r = (-divisor[0]) % p if degree(divisor) == 1 else root_from_factor(divisor, n, a, p)
        if zeta_mode == "from_factorization":
            if profile is None:
                pool = _roots_of_linear_factors(
                    berlekamp_complete(g, p, cutoff=fast_params.small_prime_cutoff), p)
                second = next(x for x in pool if x != r)
            else:
                pieces = _collect_two_roots(g, 1, desc, profile, fast_params, p)
                second = next(x for x in pieces if x != r)
            roots = all_roots_from_one(r, n, p, a, mode="from_factorization",
                                       second_root=second)
        else:
            roots = all_roots_from_one(r, n, p, a, mode="search")
        for root in roots:
            assert powmod(root, n, p) == a_mod
        return RootsResult(p=p, a=a, n=n, roots=roots,
                           method="expanded_via_unity_root", zeta_source=zeta_mode)

    result = factor_fixed(_power_poly(a, n), p, desc, params)
    roots = _roots_of_linear_factors(result.factors, p)
    for root in roots:
        assert powmod(root, n, p) == a_mod
    return RootsResult(p=p, a=a, n=n, roots=roots,
                       method="full_factorization", zeta_source="none")
