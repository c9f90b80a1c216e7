"""The fixed number field: descriptor data (integral basis, units, class
number, index, bounds), the reduction map into polynomials mod p,
coordinate-shell enumeration, and a desk-scale ideal census for imaginary
quadratic fields.

Descriptors for quadratic fields X^2 - m are computed here; higher-degree
descriptors are external JSON inputs whose decidable invariants are checked
by validate_descriptor.  Basis rows give each basis element in the power
basis 1, theta, ..., theta^(d-1) as exact rationals.
"""

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd, isqrt

from .bigmod import egcd, invmod, iroot

CENSUS_CAP_DEFAULT = 10**4

# rational pi lower bound, enough digits that upper bounds built from it
# stay within 1e-12 of the true value
_PI_LO = Fraction(3141592653589793, 10**15)


class DescriptorError(ValueError):
    pass


def _sqrt_upper(n: int) -> Fraction:
    """A rational >= sqrt(n), within 1e-10."""
    s = isqrt(n * 10**20)
    return Fraction(s + 1, 10**10)


def _round_up(x: Fraction, digits: int = 12) -> Fraction:
    scale = 10**digits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def monicize(f: list[int]) -> list[int]:
    """Monic integer companion of f: same degree, roots scaled by the
    leading coefficient (coefficient i picks up lead**(d-1-i))."""
    if len(f) < 2 or f[-1] == 0:
        raise ValueError("monicize expects a nonconstant polynomial")
    d = len(f) - 1
    lead = f[-1]
    return [f[i] * lead ** (d - 1 - i) for i in range(d)] + [1]


# ---------------------------------------------------------------------------
# small exact linear algebra


def _mat_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise DescriptorError("basis matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _mat_det(rows) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                c = m[r][col] * inv
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return det


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _poly_disc(f: list[int]) -> int:
    """Discriminant of a monic integer polynomial via the Sylvester
    resultant of f and f'."""
    d = len(f) - 1
    fp = [i * f[i] for i in range(1, d + 1)]
    n, m = d, d - 1
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + list(reversed(f)) + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + list(reversed(fp)) + [0] * (n - 1 - i))
    res = _int_det([r[:size] for r in rows])
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res


# ---------------------------------------------------------------------------
# descriptor


@dataclass
class FieldDescriptor:
    """Precomputed data of the fixed field: defining polynomial f, its monic
    companion, an integral basis over the power basis, unit generators as
    basis coordinates, class number, index of the power-basis order, a
    Minkowski-style norm bound, the coordinate search constant, and the
    field discriminant."""

    f: list[int]
    f_tilde: list[int]
    basis: list[list[Fraction]]
    units: list[list[int]]
    class_number: int
    index: int
    minkowski_bound: Fraction
    c3: Fraction
    discriminant: int
    _mul_table: list | None = field(default=None, repr=False, compare=False)
    _basis_inv: list | None = field(default=None, repr=False, compare=False)

    @property
    def degree(self) -> int:
        return len(self.f) - 1

    @property
    def leading(self) -> int:
        return self.f[-1]

    def basis_inverse(self):
        if self._basis_inv is None:
            self._basis_inv = _mat_inverse([list(map(Fraction, r)) for r in self.basis])
        return self._basis_inv

    def multiplication_table(self):
        """Structure constants: table[i][j] = integer coordinates of
        basis[i]*basis[j]; computed once, exact."""
        if self._mul_table is None:
            self._mul_table = _structure_constants(self)
        return self._mul_table


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_rem_frac(a, f_tilde):
    r = list(a)
    d = len(f_tilde) - 1
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j in range(d + 1):
                r[i - d + j] -= c * f_tilde[j]
    return r[:d] + [Fraction(0)] * (d - len(r[:d]))


def _structure_constants(desc: FieldDescriptor):
    d = desc.degree
    inv = desc.basis_inverse()
    ft = [Fraction(c) for c in desc.f_tilde]
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            prod = _poly_mul_frac(desc.basis[i], desc.basis[j])
            vec = _poly_rem_frac(prod, ft)[:d]
            vec += [Fraction(0)] * (d - len(vec))
            coords = [sum(inv[r][k] * vec[r] for r in range(d)) for k in range(d)]
            ints = []
            for c in coords:
                if c.denominator != 1:
                    raise DescriptorError(
                        f"basis not multiplicatively closed: omega_{i+1}*omega_{j+1} "
                        f"has coordinate {c}")
                ints.append(c.numerator)
            table[i][j] = table[j][i] = tuple(ints)
    return table


def alg_add(x: list[int], y: list[int]) -> list[int]:
    return [a + b for a, b in zip(x, y)]


def alg_neg(x: list[int]) -> list[int]:
    return [-a for a in x]


def alg_mul(x: list[int], y: list[int], desc: FieldDescriptor) -> list[int]:
    d = desc.degree
    table = desc.multiplication_table()
    out = [0] * d
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    c = xi * yj
                    row = table[i][j]
                    for k in range(d):
                        out[k] += c * row[k]
    return out


def alg_norm(x: list[int], desc: FieldDescriptor) -> int:
    """Determinant of multiplication by x on the integral basis; exact."""
    d = desc.degree
    cols = []
    for j in range(d):
        e = [0] * d
        e[j] = 1
        cols.append(alg_mul(x, e, desc))
    return _int_det([[cols[j][i] for j in range(d)] for i in range(d)])


def embed_mod_p(x: list[int], p: int, desc: FieldDescriptor):
    """Image of the basis-coordinate vector x in polynomials mod p of degree
    below d, sending theta to Y.  Requires p coprime to the basis
    denominators (p must not divide the index)."""
    if desc.index % p == 0:
        raise DescriptorError(f"p={p} divides the index {desc.index}")
    d = desc.degree
    acc = [Fraction(0)] * d
    for i, xi in enumerate(x):
        if xi:
            for k in range(d):
                acc[k] += xi * desc.basis[i][k]
    out = []
    for c in acc:
        num = c.numerator % p
        den = c.denominator % p
        out.append(num * invmod(den, p) % p if den != 1 else num)
    while out and out[-1] == 0:
        out.pop()
    return out


def coordinate_shells(bound: int, dim: int, start_shell: int = 1):
    """All nonzero coordinate vectors with sup-norm <= bound, yielded in
    shells of increasing sup-norm and lexicographically inside each shell;
    resumable from a shell index."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for k in range(max(1, start_shell), bound + 1):
        for vec in itertools.product(range(-k, k + 1), repeat=dim):
            if max(abs(c) for c in vec) == k:
                yield list(vec)


# ---------------------------------------------------------------------------
# validation


def validate_descriptor(desc: FieldDescriptor) -> list[tuple[str, bool, str]]:
    """Run every decidable invariant check; class number and completeness of
    the unit list are trusted inputs and not verified."""
    checks = []

    def record(name, ok, detail=""):
        checks.append((name, ok, detail))

    try:
        expected = monicize(desc.f)
        ok = expected == desc.f_tilde
        record("monic_companion", ok, "" if ok else f"expected {expected}")
    except ValueError as exc:
        record("monic_companion", False, str(exc))

    det = _mat_det(desc.basis)
    ok = abs(det) == Fraction(1, desc.index)
    record("basis_determinant", ok,
           "" if ok else f"|det|={abs(det)}, expected 1/{desc.index}")

    closed = True
    try:
        desc.multiplication_table()
    except DescriptorError as exc:
        closed = False
        record("multiplicative_closure", False, str(exc))
    if closed:
        record("multiplicative_closure", True, "")
        for i, u in enumerate(desc.units):
            nu = alg_norm(u, desc)
            ok = abs(nu) == 1
            record(f"unit_norm[{i}]", ok, "" if ok else f"norm={nu}")

    try:
        disc_f = _poly_disc(desc.f_tilde)
        ok = disc_f == desc.discriminant * desc.index**2
        record("discriminant_index", ok,
               "" if ok else f"disc(f_tilde)={disc_f} != {desc.discriminant}*{desc.index}^2")
    except Exception as exc:  # defensive: malformed polynomials
        record("discriminant_index", False, str(exc))

    return checks


# ---------------------------------------------------------------------------
# quadratic fields f = X^2 - m


def _squarefree(m: int) -> bool:
    n = abs(m)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def _ring_params(m: int) -> tuple[int, int]:
    """(t, n_w) with w*w = t*w + n_w for the canonical generator w of the
    maximal order: w = theta unless m = 1 mod 4, then w = (1+theta)/2."""
    if m % 4 == 1:
        return 1, (m - 1) // 4
    return 0, m


def class_number_imaginary(disc: int) -> int:
    """Count reduced positive binary quadratic forms of discriminant disc."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("need a negative discriminant = 0 or 1 mod 4")
    h = 0
    b = disc % 2
    while 3 * b * b <= -disc:
        q = (b * b - disc) // 4
        a = max(b, 1)
        while a * a <= q:
            if q % a == 0:
                c = q // a
                h += 1 if (b == 0 or a == b or a == c) else 2
            a += 1
        b += 2
    return h


def pell_fundamental(m: int) -> tuple[int, int]:
    """Least x + y*sqrt(m) > 1 with x^2 - m*y^2 = +-1, by the continued
    fraction of sqrt(m); m > 1 and not a square."""
    a0 = isqrt(m)
    if a0 * a0 == m:
        raise ValueError("m must not be a square")
    p_prev, p_cur = 1, a0
    q_prev, q_cur = 0, 1
    P, Q, a = 0, 1, a0
    while True:
        P = a * Q - P
        Q = (m - P * P) // Q
        a = (a0 + P) // Q
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        if Q == 1:
            return p_prev, q_prev


def fundamental_unit_real(m: int) -> tuple[int, int]:
    """Coordinates of the fundamental unit of the maximal order of the real
    quadratic field, over the basis (1, w).

    The continued fraction of sqrt(m) gives the least unit of Z[sqrt(m)];
    when m = 1 mod 4 the maximal order can hold its exact cube root with
    half-integer parts, so that candidate is searched and verified before
    settling."""
    x, y = pell_fundamental(m)
    if m % 4 != 1:
        return x, y
    # try (t + u*sqrt(m))/2 with t, u odd and t^2 - m u^2 = +-4
    eta_hi = 8 * (x + y * (isqrt(m) + 1))
    u_cap = 2 * iroot(eta_hi, 3) // isqrt(m) + 3
    for u in range(1, u_cap + 1, 2):
        for sign in (-4, 4):
            t_sq = m * u * u + sign
            if t_sq <= 0:
                continue
            t = isqrt(t_sq)
            if t * t == t_sq and t % 2 == 1:
                # cube must reproduce the Pell unit: (t+u*sqrt m)/2 cubed
                cx = (t**3 + 3 * t * u * u * m) // 8
                cy = (3 * t * t * u + u**3 * m) // 8
                if (cx, cy) == (x, y):
                    return (t - u) // 2, u
    return x - y, 2 * y  # x + y*sqrt(m) = (x-y) + 2y*w


# quadratic ideals as canonical triples (a, b, c):  Z*a + Z*(b + c*w),
# 0 <= b < a, c | a, c | b, norm a*c


def _hnf_triple(rows: list[tuple[int, int]]) -> tuple[int, int, int]:
    u_acc, v_acc = 0, 0
    for (u, v) in rows:
        if v == 0:
            continue
        if v_acc == 0:
            u_acc, v_acc = u, v
        else:
            g, s, t = egcd(v_acc, v)
            u_acc, v_acc = s * u_acc + t * u, g
    if v_acc < 0:
        u_acc, v_acc = -u_acc, -v_acc
    if v_acc == 0:
        raise ValueError("generators do not span a rank-2 module")
    a = 0
    for (u, v) in rows:
        a = int_gcd(a, u - (v // v_acc) * u_acc)
    if a == 0:
        raise ValueError("generators do not span a rank-2 module")
    a = abs(a)
    return a, u_acc % a, v_acc


def ideal_mul(i1, i2, ring):
    t, n_w = ring
    a1, b1, c1 = i1
    a2, b2, c2 = i2
    rows = [
        (a1 * a2, 0),
        (a1 * b2, a1 * c2),
        (a2 * b1, a2 * c1),
        (b1 * b2 + c1 * c2 * n_w, b1 * c2 + b2 * c1 + c1 * c2 * t),
    ]
    return _hnf_triple(rows)


def ideal_conj(i, ring):
    t, _ = ring
    a, b, c = i
    return _hnf_triple([(a, 0), (b + c * t, -c)])


def ideal_norm(i) -> int:
    return i[0] * i[2]


def principal_ideal(u: int, v: int, ring):
    """The ideal generated by u + v*w as a canonical triple."""
    t, n_w = ring
    return _hnf_triple([(u, v), (v * n_w, u + v * t)])


def elem_norm(u: int, v: int, ring) -> int:
    t, n_w = ring
    return u * u + t * u * v - n_w * v * v


def prime_ideals_above(ell: int, ring, max_norm: int):
    """Prime ideals over the rational prime ell with norm <= max_norm."""
    t, n_w = ring
    roots = [r for r in range(ell) if (r * r - t * r - n_w) % ell == 0]
    if roots:
        if ell > max_norm:
            return []
        return [(ell, (-r) % ell, 1) for r in roots]
    if ell * ell <= max_norm:
        return [(ell, 0, ell)]
    return []


def _closure_norms(generators, x_cap: int, ring) -> list[int]:
    """Norms of all distinct ideals of norm <= x_cap generated
    multiplicatively by the given ideals (the unit ideal included)."""
    unit = (1, 0, 1)
    seen = {unit}
    queue = [unit]
    while queue:
        cur = queue.pop()
        ncur = ideal_norm(cur)
        for g in generators:
            if ncur * ideal_norm(g) <= x_cap:
                prod = ideal_mul(cur, g, ring)
                if prod not in seen:
                    seen.add(prod)
                    queue.append(prod)
    return sorted(ideal_norm(i) for i in seen)


def census_norms(desc: FieldDescriptor, x: int, y: int,
                 cap: int = CENSUS_CAP_DEFAULT) -> tuple[list[int], list[int]]:
    """Sorted norm lists for the two smooth-ideal counts of an imaginary
    quadratic field: ideals of norm <= x that are products of prime ideals
    of norm <= y, and principal ideals of norm <= x that are products of
    principal ideals of norm <= y."""
    m = _quadratic_m(desc)
    if m > 0:
        raise DescriptorError("census supports imaginary quadratic fields only")
    if x > cap:
        raise DescriptorError(f"census bound {x} exceeds the cap {cap}")
    ring = _ring_params(m)
    if x < 1:
        return [], []
    if y < 2:
        return [1], [1]
    primes = []
    ell = 2
    while ell <= y:
        primes.extend(prime_ideals_above(ell, ring, y))
        ell = _next_prime_small(ell)
    all_norms = _closure_norms(primes, x, ring)

    principal_gens = set()
    t, n_w = ring
    disc = t * t + 4 * n_w  # negative
    vmax = isqrt(4 * y // -disc) + 1
    umax = isqrt(y) + vmax + 2
    for v in range(-vmax, vmax + 1):
        for u in range(-umax, umax + 1):
            nrm = elem_norm(u, v, ring)
            if 2 <= nrm <= y:
                principal_gens.add(principal_ideal(u, v, ring))
    principal_norms = _closure_norms(sorted(principal_gens), x, ring)
    return all_norms, principal_norms


def principal_ideal_census(desc: FieldDescriptor, x: int, y: int,
                           cap: int = CENSUS_CAP_DEFAULT) -> tuple[int, int]:
    """Counts behind census_norms: (all smooth ideals, principal smooth
    ideals) with norm at most x from prime/principal generators of norm at
    most y."""
    all_norms, principal_norms = census_norms(desc, x, y, cap)
    return len(all_norms), len(principal_norms)


def _next_prime_small(n: int) -> int:
    k = n + 1
    while True:
        if k < 4 or all(k % d for d in range(2, isqrt(k) + 1)):
            return k
        k += 1


def _quadratic_m(desc: FieldDescriptor) -> int:
    if desc.degree != 2 or desc.f[1] != 0 or desc.f[2] != 1:
        raise DescriptorError("descriptor does not describe X^2 - m")
    return -desc.f[0]


# real quadratic class number: ideals below the Minkowski bound, grouped by
# the principality of I * conj(J)


def _unit_value_upper(m: int, coords: tuple[int, int]) -> int:
    t, _ = _ring_params(m)
    x, y = coords
    w_hi = (t + isqrt(4 * m if t == 0 else m) + 2) // 2 + 1
    return abs(x) + abs(y) * w_hi + 1


def _is_principal_real(ideal, ring, m: int, unit_coords) -> bool:
    a, b, c = ideal
    n = ideal_norm(ideal)
    if n == 1:
        return True
    t, n_w = ring
    disc = t * t + 4 * n_w
    eps = _unit_value_upper(m, unit_coords)
    # any generator can be unit-reduced so both real embeddings are at most
    # sqrt(n * eps) in absolute value
    bnd_sq = n * eps
    bnd = isqrt(bnd_sq) + 2
    sqrt_d = isqrt(disc)
    ymax = (2 * bnd) // (c * sqrt_d) + 2
    for tt in range(-ymax, ymax + 1):
        yv = tt * c
        xmax = bnd + (abs(yv) * (abs(t) + sqrt_d + 2)) // 2 + 2
        base = tt * b
        lo = -(xmax + base) // a - 2
        hi = (xmax - base) // a + 2
        for s in range(lo, hi + 1):
            xv = s * a + base
            if abs(elem_norm(xv, yv, ring)) == n and (xv or yv):
                return True
    return False


def class_number_real(m: int, unit_coords) -> int:
    ring = _ring_params(m)
    t, n_w = ring
    disc = t * t + 4 * n_w
    bound = isqrt(disc) // 2  # floor of sqrt(disc)/2, the norm bound
    if bound < 2:
        return 1
    primes = []
    ell = 2
    while ell <= bound:
        primes.extend(prime_ideals_above(ell, ring, bound))
        ell = _next_prime_small(ell)
    unit = (1, 0, 1)
    ideals = {unit}
    queue = [unit]
    while queue:
        cur = queue.pop()
        for g in primes:
            if ideal_norm(cur) * ideal_norm(g) <= bound:
                prod = ideal_mul(cur, g, ring)
                if prod not in ideals:
                    ideals.add(prod)
                    queue.append(prod)
    classes: list[tuple[int, int, int]] = []
    for ideal in sorted(ideals):
        for rep in classes:
            if _is_principal_real(ideal_mul(ideal, ideal_conj(rep, ring), ring),
                                  ring, m, unit_coords):
                break
        else:
            classes.append(ideal)
    return len(classes)


def quadratic_descriptor(m: int) -> FieldDescriptor:
    """Descriptor for f = X^2 - m, m squarefree and not 0 or 1: integral
    basis, unit generators (fundamental unit by continued fractions when
    m > 0), class number (reduced forms when m < 0, ideal enumeration with
    equivalence testing when m > 0), index, bounds and discriminant."""
    if m in (0, 1):
        raise DescriptorError("m must not be 0 or 1")
    if not _squarefree(m):
        raise DescriptorError(f"m={m} is not squarefree")
    f = [-m, 0, 1]
    f_tilde = list(f)
    if m % 4 == 1:
        basis = [[Fraction(1), Fraction(0)], [Fraction(1, 2), Fraction(1, 2)]]
        disc = m
        index = 2
    else:
        basis = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        disc = 4 * m
        index = 1

    units = [[-1, 0]]
    if m < 0:
        if m == -1:
            units.append([0, 1])          # i
        elif m == -3:
            units.append([0, 1])          # (1+sqrt(-3))/2, order 6
        h = class_number_imaginary(disc)
        mink = _round_up(2 * _sqrt_upper(-disc) / _PI_LO)
        c3 = Fraction(2) if m % 4 == 1 else Fraction(1)
    else:
        eps = fundamental_unit_real(m)
        units.append(list(eps))
        h = class_number_real(m, eps)
        mink = _round_up(_sqrt_upper(disc) / 2)
        c3 = Fraction(2 * (isqrt(_unit_value_upper(m, eps)) + 1))

    return FieldDescriptor(
        f=f, f_tilde=f_tilde, basis=basis, units=units, class_number=h,
        index=index, minkowski_bound=mink, c3=c3, discriminant=disc)


# ---------------------------------------------------------------------------
# JSON serialization: integers as decimal strings, rationals as "num/den"


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_frac(s) -> Fraction:
    return Fraction(str(s))


def descriptor_to_json(desc: FieldDescriptor) -> dict:
    return {
        "f": [str(c) for c in desc.f],
        "f_tilde": [str(c) for c in desc.f_tilde],
        "basis": [[_frac_str(Fraction(x)) for x in row] for row in desc.basis],
        "units": [[str(c) for c in u] for u in desc.units],
        "class_number": desc.class_number,
        "index": desc.index,
        "minkowski_bound": _frac_str(desc.minkowski_bound),
        "c3": _frac_str(desc.c3),
        "discriminant": str(desc.discriminant),
    }


def descriptor_from_json(data: dict) -> FieldDescriptor:
    try:
        return FieldDescriptor(
            f=[int(c) for c in data["f"]],
            f_tilde=[int(c) for c in data["f_tilde"]],
            basis=[[_parse_frac(x) for x in row] for row in data["basis"]],
            units=[[int(c) for c in u] for u in data["units"]],
            class_number=int(data["class_number"]),
            index=int(data["index"]),
            minkowski_bound=_parse_frac(data["minkowski_bound"]),
            c3=_parse_frac(data["c3"]),
            discriminant=int(data["discriminant"]),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise DescriptorError(f"malformed descriptor: {exc}") from exc


def load_descriptor(path: str) -> FieldDescriptor:
    with open(path, "r", encoding="utf-8") as fh:
        return descriptor_from_json(json.load(fh))


def save_descriptor(desc: FieldDescriptor, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(descriptor_to_json(desc), fh, indent=2)
        fh.write("\n")
